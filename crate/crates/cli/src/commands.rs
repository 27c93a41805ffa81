//! The analysis commands. Each returns a text report and a JSON value.

use std::fmt::Write;

use bernstein_core::analysis::{analyze_element, minimal_poly_form_check, train_element_rank, TrainRank};
use bernstein_core::constructions::{self, closure, from_associative};
use bernstein_core::scalar::{self, frac, int, Scalar};
use bernstein_core::structure::{classify, find_idempotent, is_bernstein, lyubich_ideal, peirce, peirce_relations};
use bernstein_core::train::{engel_yagzhev, operator_nilpotency_check, train_analysis, OperatorCarrier};
use bernstein_core::{AlgebraTable, Element, UnivariatePoly};
use ncgb::nil::generator_span;
use ncgb::{buchberger_truncated, kurosh_presentation, nil_span_check, truncated_algebra_table, Presentation, Word};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::spec::{parse_element, parse_family};

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub text: String,
    pub json: Value,
    /// Overall verdict for commands that assert something.
    pub passed: Option<bool>,
}

fn fmt_opt(x: Option<usize>) -> String {
    x.map_or_else(|| "none".into(), |v| v.to_string())
}

fn elems(t: &AlgebraTable, xs: &[Element]) -> Vec<String> {
    xs.iter().map(|x| t.format_element(x)).collect()
}

fn scalars(xs: &[Scalar]) -> Vec<String> {
    xs.iter().map(scalar::format).collect()
}

pub fn cmd_check(t: &AlgebraTable) -> CliResult<Report> {
    let mut out = String::new();
    writeln!(out, "algebra {} (dim {})", t.name(), t.dim()).unwrap();
    let b = is_bernstein(t)?;
    writeln!(out, "bernstein identity (x^2)^2 = ω(x)^2 x^2: {b}").unwrap();
    let mut j = json!({ "name": t.name(), "dim": t.dim(), "is_bernstein": b.holds });
    if !b.holds {
        return Ok(Report { text: out, json: j, passed: None });
    }
    let r = classify(t)?;
    let p = &r.peirce;
    let relations = peirce_relations(t, p)?;
    writeln!(out, "idempotent: {}", t.format_element(&p.idempotent)).unwrap();
    writeln!(out, "U (dim {}): {}", p.u_basis.len(), elems(t, &p.u_basis).join("; ")).unwrap();
    writeln!(out, "V (dim {}): {}", p.v_basis.len(), elems(t, &p.v_basis).join("; ")).unwrap();
    writeln!(out, "type: ({}, {})", r.type_pair.0, r.type_pair.1).unwrap();
    writeln!(out, "nuclear (U^2 = V): {}", r.is_nuclear).unwrap();
    writeln!(out, "exceptional (U^2 = 0): {}", r.is_exceptional).unwrap();
    writeln!(out, "jordan: {} ({})", r.is_jordan, r.jordan_check).unwrap();
    writeln!(out, "lyubich ideal (dim {}): {}", r.lyubich_basis.len(), elems(t, &r.lyubich_basis).join("; ")).unwrap();
    writeln!(out, "peirce relations:").unwrap();
    for c in &relations {
        writeln!(out, "  {}: {}", c.name, if c.holds { "holds" } else { "fails" }).unwrap();
    }
    j["idempotent"] = json!(t.format_element(&p.idempotent));
    j["u_basis"] = json!(elems(t, &p.u_basis));
    j["v_basis"] = json!(elems(t, &p.v_basis));
    j["type"] = json!([r.type_pair.0, r.type_pair.1]);
    j["is_nuclear"] = json!(r.is_nuclear);
    j["is_exceptional"] = json!(r.is_exceptional);
    j["is_jordan"] = json!(r.is_jordan);
    j["lyubich_dim"] = json!(r.lyubich_basis.len());
    j["peirce_relations"] = relations.iter().map(|c| json!({ "name": c.name, "holds": c.holds })).collect();
    Ok(Report { text: out, json: j, passed: None })
}

pub fn cmd_element(t: &AlgebraTable, spec: &str) -> CliResult<Report> {
    let x = parse_element(t, spec)?;
    let a = analyze_element(t, &x)?;
    let mut out = String::new();
    writeln!(out, "element: {}", t.format_element(&x)).unwrap();
    writeln!(out, "degree: {}", a.degree).unwrap();
    writeln!(out, "minimal polynomial: {}", a.minimal_poly).unwrap();
    writeln!(out, "gammas: [{}]", scalars(&a.gammas()).join(", ")).unwrap();
    writeln!(out, "nil index: {} (searched to degree {})", fmt_opt(a.nil_index), a.degree + 1).unwrap();
    for (k, p) in a.power_basis.iter().enumerate() {
        writeln!(out, "  a^{} = {}", k + 1, t.format_element(p)).unwrap();
    }
    let form = match minimal_poly_form_check(t, &a) {
        Ok(ok) => json!(ok),
        Err(e) => json!(format!("n/a: {e}")),
    };
    writeln!(out, "minimal polynomial form check: {}", form.as_bool().map_or_else(|| form.as_str().unwrap().to_string(), |b| b.to_string())).unwrap();
    let rank = match train_element_rank(t, &x) {
        Ok(TrainRank::Rank(r)) => json!(r),
        Ok(TrainRank::NotFound { bound }) => json!(format!("not train up to {bound}")),
        Err(bernstein_core::Error::Internal(m)) => return Err(CliError::Internal(m)),
        Err(e) => json!(format!("n/a: {e}")),
    };
    writeln!(out, "train rank of alg(a): {}", rank.as_u64().map_or_else(|| rank.as_str().unwrap().to_string(), |r| r.to_string())).unwrap();
    let j = json!({
        "element": t.format_element(&x),
        "degree": a.degree,
        "minimal_poly": scalars(a.minimal_poly.coeffs()),
        "gammas": scalars(&a.gammas()),
        "nil_index": a.nil_index,
        "form_check": form,
        "train_rank": rank,
    });
    Ok(Report { text: out, json: j, passed: None })
}

pub fn cmd_train(t: &AlgebraTable, seed: u64) -> CliResult<Report> {
    let r = train_analysis(t, seed)?;
    let e = find_idempotent(t)?;
    let p = peirce(t, &e)?;
    let lyubich_dim = lyubich_ideal(t, &p)?.len();
    let on_lyubich = operator_nilpotency_check(t, &p, OperatorCarrier::Lyubich, seed)?;
    let mut out = String::new();
    writeln!(out, "train: {}", r.is_train).unwrap();
    writeln!(out, "rank: {} (searched to {})", fmt_opt(r.rank), r.rank_bound).unwrap();
    if let Some(eq) = r.equation() {
        writeln!(out, "equation: {eq}").unwrap();
    }
    writeln!(out, "locally train: {}", r.is_locally_train).unwrap();
    writeln!(out, "nil index of generic x in N: {} (bound {})", fmt_opt(r.nil_index_n), r.nil_bound).unwrap();
    writeln!(out, "L_v nilpotent on U: {} (bound {})", fmt_opt(r.operator_index_u), r.operator_bound).unwrap();
    writeln!(out, "L_v nilpotent on L(A): {} (bound {})", fmt_opt(on_lyubich), lyubich_dim.max(1)).unwrap();
    let j = json!({
        "is_train": r.is_train,
        "rank": r.rank,
        "rank_bound": r.rank_bound,
        "train_poly": r.train_poly.as_ref().map(|p| scalars(&p.descending_from_top())),
        "is_locally_train": r.is_locally_train,
        "nil_index_n": r.nil_index_n,
        "nil_bound": r.nil_bound,
        "operator_index_u": r.operator_index_u,
        "operator_bound": r.operator_bound,
        "operator_index_lyubich": on_lyubich,
        "seed": seed,
    });
    Ok(Report { text: out, json: j, passed: None })
}

/// `N`, `L` (Lyubich ideal), or `;`-separated element specs whose generated
/// subalgebra is used.
pub fn resolve_carrier(t: &AlgebraTable, spec: &str) -> CliResult<(String, Vec<Element>)> {
    match spec.trim() {
        "N" => Ok(("barideal N".into(), t.barideal_basis()?)),
        "L" => {
            let p = peirce(t, &find_idempotent(t)?)?;
            Ok(("Lyubich ideal".into(), lyubich_ideal(t, &p)?))
        }
        s => {
            let gens = parse_family(t, s)?;
            Ok((format!("subalgebra generated by {}", elems(t, &gens).join("; ")), closure(t, &gens)))
        }
    }
}

pub fn cmd_engel(t: &AlgebraTable, carrier: &str, seed: u64) -> CliResult<Report> {
    let (desc, basis) = resolve_carrier(t, carrier)?;
    if basis.is_empty() {
        return Err(CliError::Input("carrier is the zero subspace".into()));
    }
    let r = engel_yagzhev(t, &basis, seed)?;
    let mut out = String::new();
    writeln!(out, "carrier: {desc} (dim {})", r.carrier_dim).unwrap();
    writeln!(out, "(x^2)^2 = 0 on carrier: {}", r.square_square).unwrap();
    writeln!(out, "nil index: {} (bound {})", fmt_opt(r.nil_index), r.nil_bound).unwrap();
    writeln!(out, "Engel index: {} (bound {})", fmt_opt(r.engel_index), r.engel_bound).unwrap();
    writeln!(out, "Yagzhev index: {} (verified to q = {})", fmt_opt(r.yagzhev_index), r.yagzhev_verified_upto).unwrap();
    writeln!(out, "T_q = 2^(q-2) x^q: {}", r.tq_identity).unwrap();
    writeln!(out, "verdicts agree: {}", r.agree()).unwrap();
    let j = json!({
        "carrier": desc,
        "carrier_dim": r.carrier_dim,
        "square_square": r.square_square.holds,
        "nil_index": r.nil_index,
        "nil_bound": r.nil_bound,
        "engel_index": r.engel_index,
        "engel_bound": r.engel_bound,
        "yagzhev_index": r.yagzhev_index,
        "yagzhev_verified_upto": r.yagzhev_verified_upto,
        "tq_identity": r.tq_identity,
        "agree": r.agree(),
        "seed": seed,
    });
    Ok(Report { text: out, json: j, passed: None })
}

struct Params<'a> {
    name: &'a str,
    pairs: &'a [(String, String)],
}

impl Params<'_> {
    fn get(&self, key: &str) -> Option<&str> {
        self.pairs.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn usize_or(&self, key: &str, default: usize) -> CliResult<usize> {
        self.get(key).map_or(Ok(default), |v| {
            v.trim()
                .parse()
                .map_err(|_| CliError::Input(format!("{}: parameter {key} must be a nonnegative integer", self.name)))
        })
    }

    fn scalar(&self, key: &str) -> CliResult<Scalar> {
        let v = self
            .get(key)
            .ok_or_else(|| CliError::Input(format!("{}: missing parameter {key}", self.name)))?;
        scalar::parse(v.trim()).map_err(|e| CliError::Input(format!("{}: {key}: {e}", self.name)))
    }

    fn only(&self, allowed: &[&str]) -> CliResult<()> {
        match self.pairs.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            Some((k, _)) => Err(CliError::Input(format!("{}: unknown parameter {k}", self.name))),
            None => Ok(()),
        }
    }
}

/// Runs a named factory with `key=value` parameters.
pub fn construct(name: &str, pairs: &[(String, String)]) -> CliResult<AlgebraTable> {
    let p = Params { name, pairs };
    let t = match name {
        "elementary" => {
            p.only(&["dim"])?;
            constructions::elementary(p.usize_or("dim", 3)?)?
        }
        "constant" => {
            p.only(&[])?;
            constructions::constant_algebra()
        }
        "nuclear" => {
            p.only(&[])?;
            constructions::nuclear_example()
        }
        "three-dim-alpha" => {
            p.only(&["alpha"])?;
            constructions::three_dim_alpha(&p.scalar("alpha")?)
        }
        "example-not-train" => {
            p.only(&[])?;
            constructions::example_not_train()
        }
        "shift-up" => {
            p.only(&["n"])?;
            constructions::shift_up_truncated(p.usize_or("n", 4)?)?
        }
        "shift-down" => {
            p.only(&["n"])?;
            constructions::shift_down_truncated(p.usize_or("n", 4)?)?
        }
        "free-single" => {
            p.only(&["n", "betas"])?;
            let betas = p
                .get("betas")
                .map(|s| {
                    s.split(',')
                        .map(|b| scalar::parse(b.trim()).map_err(|e| CliError::Input(format!("free-single: betas: {e}"))))
                        .collect::<CliResult<Vec<_>>>()
                })
                .transpose()?;
            constructions::free_single_truncated(p.usize_or("n", 5)?, betas.as_deref())?
        }
        "zhevlakov" => {
            p.only(&["vars", "len"])?;
            let (n, part) = constructions::zhevlakov_truncated(p.usize_or("vars", 4)?, p.usize_or("len", 4)?)?;
            constructions::adjoin_idempotent(&n, &part)?
        }
        "poly-ring-assoc" => {
            p.only(&["n"])?;
            let c = constructions::truncated_polynomial_ring(p.usize_or("n", 3)?)?;
            if c.dim() < 2 {
                return Err(CliError::Input("poly-ring-assoc: n must be at least 2".into()));
            }
            let mut s = vec![int(0); c.dim()];
            s[1] = int(1);
            from_associative(&c, &[s])?
        }
        other => {
            let names: Vec<&str> = constructions::FACTORIES.iter().map(|(n, _)| *n).collect();
            return Err(CliError::Input(format!("unknown construction '{other}'; known: {}", names.join(", "))));
        }
    };
    Ok(t)
}

pub fn cmd_groebner(p: &Presentation, max_deg: usize, list_deg: usize) -> CliResult<Report> {
    let g = buchberger_truncated(p, max_deg)?;
    let names = g.generators();
    let mut out = String::new();
    writeln!(out, "generators: {} (deg-lex, {} largest)", names.join(" > "), names[0]).unwrap();
    writeln!(out, "basis ({} elements):", g.basis().len()).unwrap();
    for b in g.basis() {
        writeln!(out, "  {}", b.render(names)).unwrap();
    }
    writeln!(out, "obstructions resolved: {}", g.obstructions_checked).unwrap();
    writeln!(out, "new elements: {}", g.added_elements).unwrap();
    writeln!(out, "complete below degree {}", g.complete_below).unwrap();
    if g.relations_are_basis() {
        writeln!(out, "relations are a Gröbner basis up to degree {max_deg}").unwrap();
    }
    let counts = g.hilbert_counts(max_deg)?;
    writeln!(out, "hilbert counts (degree 0..={max_deg}): {counts:?}").unwrap();
    let mut listing = Vec::new();
    for d in 1..=list_deg.min(max_deg) {
        let words: Vec<String> = g.normal_words(d)?.iter().map(|w| w.render(names)).collect();
        writeln!(out, "normal words of degree {d}: {}", words.join(" ")).unwrap();
        listing.push(json!({ "degree": d, "words": words }));
    }
    let j = json!({
        "basis": g.basis().iter().map(|b| b.render(names)).collect::<Vec<_>>(),
        "obstructions_checked": g.obstructions_checked,
        "added_elements": g.added_elements,
        "relations_are_basis": g.relations_are_basis(),
        "max_degree": g.max_degree,
        "complete_below": g.complete_below,
        "hilbert_counts": counts,
        "normal_words": listing,
    });
    Ok(Report { text: out, json: j, passed: None })
}

#[derive(Clone, Debug, PartialEq)]
pub struct DemoStep {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn insufficient(needed: usize, available: usize, what: &str) -> String {
    format!("completeness bound insufficient for {what}: need complete_below >= {needed}, have {available}")
}

/// The Kurosh pipeline: Gröbner basis, nil identity, growth evidence, and the
/// rank-4 train algebra built from the truncated quotient.
pub fn kurosh_demo(max_deg: usize, trunc: usize, seed: u64) -> CliResult<Vec<DemoStep>> {
    let p = kurosh_presentation();
    let g = buchberger_truncated(&p, max_deg)?;
    let mut steps = Vec::new();
    steps.push(DemoStep {
        name: "groebner basis",
        passed: g.relations_are_basis(),
        detail: format!(
            "{} obstructions up to degree {max_deg}, {} new elements, complete below {}",
            g.obstructions_checked, g.added_elements, g.complete_below
        ),
    });
    let nil = match nil_span_check(&p, &generator_span(&p), 3, &g) {
        Ok(r) => DemoStep {
            name: "(αx + βy)^3 = 0",
            passed: r.holds,
            detail: format!("{} coefficient polynomials reduced to zero: {}", r.coefficients, r.holds),
        },
        Err(ncgb::Error::CompletenessInsufficient { needed, available }) => DemoStep {
            name: "(αx + βy)^3 = 0",
            passed: false,
            detail: insufficient(needed, available, "nil_span power 3"),
        },
        Err(e) => return Err(e.into()),
    };
    steps.push(nil);
    let counts = g.hilbert_counts(max_deg)?;
    steps.push(DemoStep {
        name: "hilbert counts positive",
        passed: counts[1..].iter().all(|&c| c > 0),
        detail: format!("degrees 1..={max_deg}: {:?}", &counts[1..]),
    });
    let xy = Word(vec![0, 1]);
    steps.push(if 12 < g.complete_below {
        let normal = (1..=6).all(|t| g.is_normal(&xy.pow(t)));
        DemoStep { name: "(xy)^t normal, t <= 6", passed: normal, detail: format!("all normal: {normal}") }
    } else {
        DemoStep {
            name: "(xy)^t normal, t <= 6",
            passed: false,
            detail: insufficient(13, g.complete_below, "(xy)^6"),
        }
    });
    let needed = 2 * trunc;
    let table = if trunc == 0 {
        return Err(CliError::Input("truncation degree must be positive".into()));
    } else if g.complete_below < needed || trunc >= g.complete_below {
        steps.push(DemoStep {
            name: "truncated quotient",
            passed: false,
            detail: insufficient(needed.max(trunc + 1), g.complete_below, &format!("truncation at degree {trunc}")),
        });
        None
    } else {
        let c = truncated_algebra_table(&g, trunc)?;
        let assoc = c.table.check_associative().is_ok();
        steps.push(DemoStep {
            name: "truncated quotient",
            passed: assoc,
            detail: format!("dim C = {}, words above degree {trunc} set to zero, associative: {assoc}", c.table.dim()),
        });
        Some(c)
    };
    let train = match table {
        None => DemoStep { name: "train of rank 4", passed: false, detail: "skipped: no truncated quotient".into() },
        Some(c) => {
            let d = c.table.dim();
            let unit = |i: usize| (0..d).map(|k| if k == i { int(1) } else { int(0) }).collect::<Vec<_>>();
            let a = from_associative(&c.table, &[unit(0), unit(1)])?;
            let r = train_analysis(&a, seed)?;
            let expected = vec![int(1), frac(-3, 2), frac(1, 2), int(0)];
            let got = r.train_poly.as_ref().map(UnivariatePoly::descending_from_top);
            DemoStep {
                name: "train of rank 4",
                passed: r.rank == Some(4) && got.as_ref() == Some(&expected),
                detail: format!(
                    "Bernstein dim {}, rank {}, equation {}",
                    a.dim(),
                    fmt_opt(r.rank),
                    r.equation().unwrap_or_else(|| "none".into())
                ),
            }
        }
    };
    steps.push(train);
    Ok(steps)
}

pub fn cmd_kurosh_demo(max_deg: usize, trunc: usize, seed: u64) -> CliResult<Report> {
    let steps = kurosh_demo(max_deg, trunc, seed)?;
    let passed = steps.iter().all(|s| s.passed);
    let mut out = String::new();
    writeln!(out, "Kurosh pipeline (max degree {max_deg}, truncation {trunc})").unwrap();
    for s in &steps {
        writeln!(out, "  [{}] {}: {}", if s.passed { "PASS" } else { "FAIL" }, s.name, s.detail).unwrap();
    }
    writeln!(out, "{}", if passed { "PASS" } else { "FAIL" }).unwrap();
    let j = json!({
        "max_degree": max_deg,
        "trunc": trunc,
        "passed": passed,
        "steps": steps.iter().map(|s| json!({ "name": s.name, "passed": s.passed, "detail": s.detail })).collect::<Vec<_>>(),
    });
    Ok(Report { text: out, json: j, passed: Some(passed) })
}
