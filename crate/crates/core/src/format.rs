//! Text format for hypergroups and fusion rings.
//!
//! A file is TOML with one header table and a `[products]` table:
//!
//! ```toml
//! [hypergroup]
//! name = "K(2)"
//! elements = ["c0", "c1"]
//! involution = ["c0", "c1"]
//!
//! [products]
//! "c1*c1" = { "c0" = "1/2", "c1" = "1/2" }
//! ```
//!
//! `[fusion]` in place of `[hypergroup]` switches to nonnegative integer
//! coefficients. An optional `field = D` in the header requires every
//! square root to be one of `√D`. Products with the identity may be
//! omitted; all others must be present, and coefficients left out of a
//! product are zero. Scalar literals use the canonical grammar `p`, `p/q`
//! or `(p±r*sqrt(D))/q`. The first element listed is the identity.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::Range;

use num_traits::Zero;
use serde::Deserialize;
use thiserror::Error;
use toml::Spanned;

use crate::fusion::{CatalogObject, FusionError, FusionRing};
use crate::hypergroup::{Hypergroup, HypergroupError};
use crate::scalar::{parse_scalar, QuadScalar};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum FormatError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Invalid(String),
}

/// A loaded file: its name and the validated object.
#[derive(Clone, Debug)]
pub struct HypergroupFile {
    pub name: String,
    pub object: CatalogObject,
}

type Coefficients = BTreeMap<Spanned<String>, Spanned<toml::Value>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHeader {
    name: Option<String>,
    field: Option<Spanned<u64>>,
    elements: Spanned<Vec<String>>,
    involution: Spanned<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    hypergroup: Option<RawHeader>,
    fusion: Option<RawHeader>,
    products: Option<Spanned<BTreeMap<Spanned<String>, Spanned<Coefficients>>>>,
}

struct Locator<'a>(&'a str);

impl Locator<'_> {
    fn at(&self, span: Option<Range<usize>>, message: impl Into<String>) -> FormatError {
        let offset = span.map_or(0, |s| s.start).min(self.0.len());
        let before = &self.0[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(offset, |p| offset - p - 1) + 1;
        FormatError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }
}

fn split_key(key: &str, labels: &[String]) -> Option<(usize, usize)> {
    key.match_indices('*').find_map(|(p, _)| {
        let i = labels.iter().position(|l| l == key[..p].trim())?;
        let j = labels.iter().position(|l| l == key[p + 1..].trim())?;
        Some((i, j))
    })
}

fn parse_literal(text: &str, field: Option<u64>) -> Result<QuadScalar, String> {
    let text = text.trim();
    parse_scalar(text, field)
        .or_else(|first| {
            // `(p/q)` is accepted as a parenthesized rational
            match text.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
                Some(inner) if !inner.contains('(') => parse_scalar(inner, field),
                _ => Err(first),
            }
        })
        .map_err(|e| format!("bad scalar literal `{text}`: {e}"))
}

/// Parses and validates a file.
pub fn load(text: &str) -> Result<HypergroupFile, FormatError> {
    let loc = Locator(text);
    let raw: RawFile = toml::from_str(text).map_err(|e| loc.at(e.span(), e.message().to_string()))?;
    let (header, integral) = match (raw.hypergroup, raw.fusion) {
        (Some(h), None) => (h, false),
        (None, Some(f)) => (f, true),
        (Some(_), Some(_)) => return Err(loc.at(None, "both [hypergroup] and [fusion] tables present")),
        (None, None) => return Err(loc.at(None, "expected a [hypergroup] or [fusion] table")),
    };
    let labels = header.elements.get_ref().clone();
    let n = labels.len();
    if n == 0 {
        return Err(loc.at(Some(header.elements.span()), "no elements"));
    }
    if let Some(bad) = labels.iter().find(|l| l.contains('*')) {
        return Err(loc.at(Some(header.elements.span()), format!("label `{bad}` contains `*`")));
    }
    if header.involution.get_ref().len() != n {
        return Err(loc.at(
            Some(header.involution.span()),
            format!("involution lists {} labels, expected {n}", header.involution.get_ref().len()),
        ));
    }
    let mut involution = Vec::with_capacity(n);
    for l in header.involution.get_ref() {
        let i = labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| loc.at(Some(header.involution.span()), format!("unknown label `{l}` in involution")))?;
        involution.push(i);
    }
    let field = header.field.as_ref().map(|f| *f.get_ref());

    let mut given: Vec<Vec<Option<Vec<QuadScalar>>>> = vec![vec![None; n]; n];
    let products_span = raw.products.as_ref().map(|p| p.span());
    if let Some(products) = raw.products {
        for (key, coeffs) in products.into_inner() {
            let (i, j) = split_key(key.get_ref(), &labels)
                .ok_or_else(|| loc.at(Some(key.span()), format!("`{}` is not a product of two labels", key.get_ref())))?;
            let mut row = vec![QuadScalar::zero(); n];
            for (label, value) in coeffs.into_inner() {
                let k = labels
                    .iter()
                    .position(|x| x == label.get_ref())
                    .ok_or_else(|| loc.at(Some(label.span()), format!("unknown label `{}`", label.get_ref())))?;
                let span = value.span();
                row[k] = match (value.into_inner(), integral) {
                    (toml::Value::Integer(v), _) if !integral || v >= 0 => QuadScalar::from(v),
                    (toml::Value::String(s), false) => parse_literal(&s, field).map_err(|m| loc.at(Some(span), m))?,
                    (_, true) => return Err(loc.at(Some(span), "fusion coefficients are nonnegative integers")),
                    (_, false) => return Err(loc.at(Some(span), "coefficients are integers or quoted exact literals")),
                };
            }
            given[i][j] = Some(row);
        }
    }
    let mut table = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            table[i][j] = match given[i][j].take() {
                Some(row) => row,
                None if i == 0 || j == 0 => {
                    let mut row = vec![QuadScalar::zero(); n];
                    row[i + j] = QuadScalar::from(1);
                    row
                }
                None => {
                    return Err(loc.at(
                        products_span.clone(),
                        format!("missing product \"{}*{}\"", labels[i], labels[j]),
                    ))
                }
            };
        }
    }
    let name = header.name.unwrap_or_default();
    let object = if integral {
        let ints = table
            .iter()
            .map(|r| {
                r.iter()
                    .map(|row| row.iter().map(|v| v.a().to_integer().try_into().unwrap_or(i64::MAX)).collect())
                    .collect()
            })
            .collect();
        CatalogObject::Ring(FusionRing::new(labels, involution, ints).map_err(|e| match e {
            FusionError::Invalid(r) => FormatError::Invalid(format!("invalid fusion ring: {r}")),
            e => FormatError::Invalid(e.to_string()),
        })?)
    } else {
        CatalogObject::Hypergroup(Hypergroup::new(labels, involution, table).map_err(|e| match e {
            HypergroupError::Invalid(r) => FormatError::Invalid(format!("invalid hypergroup: {r}")),
            e => FormatError::Invalid(e.to_string()),
        })?)
    };
    Ok(HypergroupFile { name, object })
}

fn quote(s: &str) -> String {
    toml::Value::String(s.to_string()).to_string()
}

fn header(out: &mut String, table: &str, name: &str, labels: &[String], involution: &[usize], field: u64) {
    let list = |v: Vec<&str>| v.iter().map(|l| quote(l)).collect::<Vec<_>>().join(", ");
    writeln!(out, "[{table}]").unwrap();
    writeln!(out, "name = {}", quote(name)).unwrap();
    if field > 1 {
        writeln!(out, "field = {field}").unwrap();
    }
    writeln!(out, "elements = [{}]", list(labels.iter().map(String::as_str).collect())).unwrap();
    writeln!(
        out,
        "involution = [{}]",
        list(involution.iter().map(|&i| labels[i].as_str()).collect())
    )
    .unwrap();
    writeln!(out, "\n[products]").unwrap();
}

/// Canonical text: identity products omitted, zero coefficients omitted.
pub fn save(name: &str, object: &CatalogObject) -> String {
    let mut out = String::new();
    match object {
        CatalogObject::Hypergroup(k) => {
            let field = k.radicand();
            header(&mut out, "hypergroup", name, k.labels(), k.involution(), field);
            for i in 1..k.size() {
                for j in 1..k.size() {
                    let entries: Vec<String> = (0..k.size())
                        .filter(|&m| !k.constant(i, j, m).is_zero())
                        .map(|m| format!("{} = {}", quote(k.label(m)), quote(&k.constant(i, j, m).to_string())))
                        .collect();
                    let key = quote(&format!("{}*{}", k.label(i), k.label(j)));
                    writeln!(out, "{key} = {{ {} }}", entries.join(", ")).unwrap();
                }
            }
        }
        CatalogObject::Ring(f) => {
            header(&mut out, "fusion", name, f.labels(), f.involution(), 0);
            for i in 1..f.size() {
                for j in 1..f.size() {
                    let entries: Vec<String> = (0..f.size())
                        .filter(|&m| f.constant(i, j, m) != 0)
                        .map(|m| format!("{} = {}", quote(f.label(m)), f.constant(i, j, m)))
                        .collect();
                    let key = quote(&format!("{}*{}", f.label(i), f.label(j)));
                    writeln!(out, "{key} = {{ {} }}", entries.join(", ")).unwrap();
                }
            }
        }
    }
    out
}
