//! Walk probes: `c1`, `haar`, or `1/2*g + 1/2*rho`.

use hyperfuse::scalar::parse_scalar;
use hyperfuse::{AlgebraElement, Hypergroup, QuadScalar};

fn split_top(text: &str, sep: char) -> Vec<&str> {
    let mut depth = 0i32;
    let mut out = Vec::new();
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&text[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

fn label(k: &Hypergroup, s: &str) -> Result<usize, String> {
    let s = s.trim();
    k.index_of(s).ok_or_else(|| format!("unknown element `{s}` in probe"))
}

pub fn parse_probe(k: &Hypergroup, text: &str) -> Result<AlgebraElement, String> {
    let text = text.trim();
    if text == "haar" {
        return Ok(k.haar_element());
    }
    let mut coeffs = vec![QuadScalar::from(0); k.size()];
    for term in split_top(text, '+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(format!("empty term in probe `{text}`"));
        }
        // a label may itself contain `*` only inside parentheses
        let parts = split_top(term, '*');
        let (coeff, name) = if parts.len() == 1 {
            (QuadScalar::from(1), parts[0])
        } else {
            let at = term.len() - parts.last().unwrap().len() - 1;
            let c = parse_scalar(term[..at].trim(), None).map_err(|e| format!("bad coefficient in `{term}`: {e}"))?;
            (c, parts.last().unwrap().to_owned())
        };
        let i = label(k, name)?;
        coeffs[i] = &coeffs[i] + &coeff;
    }
    let x = k.element(coeffs).map_err(|e| e.to_string())?;
    if !x.is_convex() {
        return Err(format!("probe `{text}` is not a convex combination"));
    }
    Ok(x)
}
