use std::fmt;

use super::FusionError;

/// A finite group given by its multiplication table; index 0 is the
/// identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Checks the group axioms on a raw table.
    pub fn from_table(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self, FusionError> {
        let n = labels.len();
        let bad = |why: &str| FusionError::InvalidParams(format!("not a group table: {why}"));
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(bad("shape"));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(bad("entry out of range"));
        }
        if (0..n).any(|g| table[0][g] != g || table[g][0] != g) {
            return Err(bad("element 0 is not the identity"));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for g in 0..n {
            inverse[g] = (0..n).find(|&h| table[g][h] == 0).ok_or_else(|| bad("missing inverse"))?;
        }
        Ok(FiniteGroup {
            name: name.into(),
            labels,
            table,
            inverse,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let labels = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(format!("Z{n}"), labels, table).expect("cyclic group")
    }

    /// Direct product of cyclic groups `Z_{n_1} × … × Z_{n_r}`; generators
    /// are labelled `a, b, c, …`.
    pub fn abelian(orders: &[usize]) -> Self {
        if orders.len() == 1 {
            return Self::cyclic(orders[0]);
        }
        let size: usize = orders.iter().product();
        let digits = |mut x: usize| {
            orders
                .iter()
                .map(|&o| {
                    let d = x % o;
                    x /= o;
                    d
                })
                .collect::<Vec<_>>()
        };
        let index = |ds: &[usize]| {
            ds.iter()
                .zip(orders)
                .rev()
                .fold(0, |acc, (&d, &o)| acc * o + d)
        };
        let labels = (0..size)
            .map(|x| {
                let ds = digits(x);
                let s: String = ds
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d > 0)
                    .map(|(g, &d)| {
                        let letter = (b'a' + g as u8) as char;
                        if d == 1 {
                            letter.to_string()
                        } else {
                            format!("{letter}{d}")
                        }
                    })
                    .collect();
                if s.is_empty() {
                    "e".to_string()
                } else {
                    s
                }
            })
            .collect();
        let table = (0..size)
            .map(|x| {
                (0..size)
                    .map(|y| {
                        let sum: Vec<usize> = digits(x)
                            .iter()
                            .zip(digits(y))
                            .zip(orders)
                            .map(|((a, b), o)| (a + b) % o)
                            .collect();
                        index(&sum)
                    })
                    .collect()
            })
            .collect();
        let name = orders
            .iter()
            .map(|o| format!("Z{o}"))
            .collect::<Vec<_>>()
            .join("xZ")
            .replace("xZZ", "xZ");
        Self::from_table(name, labels, table).expect("abelian group")
    }

    /// Symmetric group on `n ≤ 5` letters, labelled in cycle notation.
    pub fn symmetric(n: usize) -> Self {
        assert!((1..=5).contains(&n));
        let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
        // all permutations, identity first
        let mut all = Vec::new();
        permutations(&mut (0..n).collect(), 0, &mut all);
        all.retain(|p| p != &perms[0]);
        all.sort();
        perms.extend(all);
        let pos = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        // (a·b)(x) = a(b(x))
                        let c: Vec<usize> = (0..n).map(|x| a[b[x]]).collect();
                        pos(&c)
                    })
                    .collect()
            })
            .collect();
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        Self::from_table(format!("S{n}"), labels, table).expect("symmetric group")
    }

    /// Parses `Z1`, `Zn`, `Z2xZ2` (or `×`), `Sn`.
    pub fn parse(text: &str) -> Result<Self, FusionError> {
        let t = text.trim();
        let err = || FusionError::InvalidParams(format!("unknown group `{text}`"));
        if let Some(n) = t.strip_prefix('S') {
            let n: usize = n.parse().map_err(|_| err())?;
            if !(1..=5).contains(&n) {
                return Err(err());
            }
            return Ok(Self::symmetric(n));
        }
        let orders = t
            .split(['x', '×', '*'])
            .map(|part| {
                part.trim()
                    .strip_prefix('Z')
                    .and_then(|n| n.parse::<usize>().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(err)
            })
            .collect::<Result<Vec<_>, _>>()?;
        if orders.is_empty() {
            return Err(err());
        }
        let nontrivial: Vec<usize> = orders.iter().copied().filter(|&o| o > 1).collect();
        Ok(if nontrivial.is_empty() {
            Self::cyclic(1)
        } else {
            Self::abelian(&nontrivial)
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}
