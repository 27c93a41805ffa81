//! JSON file formats for algebras and presentations.

use std::collections::{BTreeMap, HashMap};

use bernstein_core::scalar::{self, Scalar};
use bernstein_core::AlgebraTable;
use ncgb::{NcPoly, Presentation, Word};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub value: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<BTreeMap<String, String>>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn parse_scalar(s: &str, context: &str) -> CliResult<Scalar> {
    scalar::parse(s).map_err(|e| input(format!("{context}: {e}")))
}

impl AlgebraFile {
    pub fn parse(text: &str) -> CliResult<Self> {
        serde_json::from_str(text)
            .map_err(|e| input(format!("algebra file, line {} column {}: {e}", e.line(), e.column())))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra file serializes")
    }

    pub fn from_table(t: &AlgebraTable) -> Self {
        let labels = t.labels();
        let map = |terms: &mut dyn Iterator<Item = (usize, &Scalar)>| {
            terms
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (labels[k].clone(), scalar::format(c)))
                .collect::<BTreeMap<_, _>>()
        };
        AlgebraFile {
            name: t.name().to_string(),
            basis: labels.to_vec(),
            weight: t.weight().map(|w| map(&mut w.iter().enumerate())),
            products: t
                .products()
                .map(|(i, j, v)| ProductEntry {
                    left: labels[i].clone(),
                    right: labels[j].clone(),
                    value: map(&mut v.iter().map(|(k, c)| (*k, c))),
                })
                .collect(),
        }
    }

    pub fn to_table(&self) -> CliResult<AlgebraTable> {
        let mut index = HashMap::new();
        for (i, l) in self.basis.iter().enumerate() {
            if l.trim().is_empty() {
                return Err(input(format!("basis entry {} is empty", i + 1)));
            }
            if index.insert(l.as_str(), i).is_some() {
                return Err(input(format!("basis label '{l}' appears twice")));
            }
        }
        let dim = self.basis.len();
        let lookup = |l: &str, context: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| input(format!("{context}: unknown basis label '{l}'")))
        };
        let dense = |m: &BTreeMap<String, String>, context: &str| -> CliResult<Vec<Scalar>> {
            let mut v = vec![Scalar::zero(); dim];
            for (l, s) in m {
                let k = lookup(l, context)?;
                v[k] = parse_scalar(s, &format!("{context}, label '{l}'"))?;
            }
            Ok(v)
        };
        let weight = self.weight.as_ref().map(|w| dense(w, "weight")).transpose()?;
        let mut seen = HashMap::new();
        let mut products = Vec::with_capacity(self.products.len());
        for (n, p) in self.products.iter().enumerate() {
            let context = format!("product {} ({}*{})", n + 1, p.left, p.right);
            let (i, j) = (lookup(&p.left, &context)?, lookup(&p.right, &context)?);
            let key = (i.min(j), i.max(j));
            if let Some(prev) = seen.insert(key, n) {
                return Err(input(format!("{context} duplicates product {}", prev + 1)));
            }
            products.push((key, dense(&p.value, &context)?));
        }
        Ok(AlgebraTable::new(self.name.clone(), self.basis.clone(), products, weight)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermEntry {
    pub coeff: String,
    pub word: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    pub generators: Vec<String>,
    pub relations: Vec<Vec<TermEntry>>,
}

impl PresentationFile {
    pub fn parse(text: &str) -> CliResult<Self> {
        serde_json::from_str(text)
            .map_err(|e| input(format!("presentation file, line {} column {}: {e}", e.line(), e.column())))
    }

    pub fn from_presentation(p: &Presentation) -> Self {
        PresentationFile {
            generators: p.generators.clone(),
            relations: p
                .relations
                .iter()
                .map(|r| {
                    r.terms()
                        .rev()
                        .map(|(w, c)| TermEntry {
                            coeff: scalar::format(c),
                            word: w.letters().iter().map(|&g| p.generators[g].clone()).collect(),
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_presentation(&self) -> CliResult<Presentation> {
        let index: HashMap<&str, usize> = self.generators.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect();
        let mut relations = Vec::with_capacity(self.relations.len());
        for (n, rel) in self.relations.iter().enumerate() {
            let mut p = NcPoly::zero();
            for t in rel {
                let context = format!("relation {}", n + 1);
                let letters = t
                    .word
                    .iter()
                    .map(|g| index.get(g.as_str()).copied().ok_or_else(|| input(format!("{context}: unknown generator '{g}'"))))
                    .collect::<CliResult<Vec<_>>>()?;
                p.add_term(Word(letters), parse_scalar(&t.coeff, &context)?);
            }
            relations.push(p);
        }
        Ok(Presentation::new(self.generators.clone(), relations)?)
    }
}
