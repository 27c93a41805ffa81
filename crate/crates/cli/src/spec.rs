//! Element specs: rational combinations of basis labels such as `e + 2u1 - 1/2 v`.

use bernstein_core::scalar::{self, Scalar};
use bernstein_core::{AlgebraTable, Element};
use num_traits::One;

use crate::error::{CliError, CliResult};

pub fn parse_element(table: &AlgebraTable, spec: &str) -> CliResult<Element> {
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(CliError::Input("empty element spec".into()));
    }
    let mut x = table.zero();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (neg, body) = match rest.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, rest.strip_prefix('+').unwrap_or(rest)),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        let (c, i) = parse_term(table, term).ok_or_else(|| {
            CliError::Input(format!("cannot read term '{term}' in '{spec}': expected [p/q] <basis label>"))
        })?;
        x.0[i] += if neg { -c } else { c };
        rest = &body[end..];
    }
    Ok(x)
}

/// A term is a basis label optionally preceded by a rational coefficient and
/// an optional `*`. The longest coefficient prefix that leaves a label wins.
fn parse_term(table: &AlgebraTable, term: &str) -> Option<(Scalar, usize)> {
    if let Some(i) = table.label_index(term) {
        return Some((Scalar::one(), i));
    }
    let numeric = term
        .char_indices()
        .take_while(|(_, c)| c.is_ascii_digit() || *c == '/')
        .last()
        .map_or(0, |(i, _)| i + 1);
    (1..=numeric).rev().find_map(|cut| {
        let label = term[cut..].strip_prefix('*').unwrap_or(&term[cut..]);
        let i = table.label_index(label)?;
        let c = scalar::parse(&term[..cut]).ok()?;
        Some((c, i))
    })
}

/// Element specs separated by `;`.
pub fn parse_family(table: &AlgebraTable, spec: &str) -> CliResult<Vec<Element>> {
    spec.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_element(table, s))
        .collect()
}
