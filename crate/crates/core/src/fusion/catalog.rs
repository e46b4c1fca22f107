//! Parametric families of fusion rings and hypergroups.

use num_traits::One;

use super::{to_hypergroup, FiniteGroup, FusionError, FusionRing};
use crate::hypergroup::Hypergroup;
use crate::scalar::{parse_scalar, QuadScalar};

/// Family names accepted by [`catalog`].
pub const FAMILIES: &[&str] = &[
    "group",
    "tambara_yamagami",
    "near_group",
    "haagerup_izumi",
    "su2_level",
    "two_element",
    "fibonacci",
];

/// A catalog entry: fusion rings for the integral families, a hypergroup
/// for `two_element`.
#[derive(Clone, Debug)]
pub enum CatalogObject {
    Ring(FusionRing),
    Hypergroup(Hypergroup),
}

impl CatalogObject {
    /// The hypergroup itself, or `K_F` for a fusion ring.
    pub fn hypergroup(&self) -> Result<Hypergroup, FusionError> {
        match self {
            CatalogObject::Ring(f) => to_hypergroup(f),
            CatalogObject::Hypergroup(k) => Ok(k.clone()),
        }
    }

    pub fn ring(&self) -> Option<&FusionRing> {
        match self {
            CatalogObject::Ring(f) => Some(f),
            CatalogObject::Hypergroup(_) => None,
        }
    }
}

/// Parameters for [`catalog`]; which ones are read depends on the family.
#[derive(Clone, Debug, Default)]
pub struct CatalogParams {
    /// Group name such as `Z3`, `Z2xZ2` or `S3`.
    pub group: Option<String>,
    pub m: Option<u32>,
    pub k: Option<u32>,
    /// Scalar literal for `two_element`.
    pub d: Option<String>,
}

pub fn catalog(family: &str, params: &CatalogParams) -> Result<CatalogObject, FusionError> {
    let group = || {
        params
            .group
            .as_deref()
            .ok_or_else(|| FusionError::InvalidParams(format!("{family} needs a group")))
            .and_then(FiniteGroup::parse)
    };
    let need = |v: Option<u32>, name: &str| {
        v.ok_or_else(|| FusionError::InvalidParams(format!("{family} needs --{name}")))
    };
    Ok(match family {
        "group" => CatalogObject::Ring(FusionRing::group_ring(&group()?)),
        "tambara_yamagami" => CatalogObject::Ring(tambara_yamagami(&group()?)?),
        "near_group" => CatalogObject::Ring(near_group(&group()?, need(params.m, "m")?)?),
        "haagerup_izumi" => CatalogObject::Ring(haagerup_izumi(&group()?)?),
        "su2_level" => CatalogObject::Ring(su2_level(need(params.k, "k")?)?),
        "two_element" => {
            let text = params
                .d
                .as_deref()
                .ok_or_else(|| FusionError::InvalidParams("two_element needs --d".into()))?;
            CatalogObject::Hypergroup(two_element(&parse_scalar(text, None)?)?)
        }
        "fibonacci" => CatalogObject::Ring(fibonacci()),
        other => {
            return Err(FusionError::InvalidParams(format!(
                "unknown family `{other}` (expected one of {})",
                FAMILIES.join(", ")
            )))
        }
    })
}

fn require_abelian(g: &FiniteGroup, family: &str) -> Result<(), FusionError> {
    if g.is_abelian() {
        Ok(())
    } else {
        Err(FusionError::InvalidParams(format!("{family} needs an abelian group, {g} is not")))
    }
}

/// `G ∪ {ρ}` with `gρ = ρg = ρ` and `ρ² = Σ_g g + mρ`.
pub fn near_group(g: &FiniteGroup, m: u32) -> Result<FusionRing, FusionError> {
    require_abelian(g, "near_group")?;
    let n = g.order();
    let rho = n;
    let mut labels = g.labels().to_vec();
    labels.push("rho".into());
    let mut involution: Vec<usize> = (0..n).map(|a| g.inverse(a)).collect();
    involution.push(rho);
    FusionRing::from_fn(labels, involution, |i, j, k| match (i < n, j < n) {
        (true, true) => i64::from(k == g.mul(i, j)),
        (true, false) | (false, true) => i64::from(k == rho),
        (false, false) => {
            if k == rho {
                i64::from(m)
            } else {
                1
            }
        }
    })
}

/// Near-group with `m = 0`: `ρ² = Σ_g g`.
pub fn tambara_yamagami(g: &FiniteGroup) -> Result<FusionRing, FusionError> {
    require_abelian(g, "tambara_yamagami")?;
    near_group(g, 0)
}

/// `G ∪ {gρ}` with `ρg = g⁻¹ρ` and `ρ² = e + Σ_g gρ`.
pub fn haagerup_izumi(g: &FiniteGroup) -> Result<FusionRing, FusionError> {
    require_abelian(g, "haagerup_izumi")?;
    let n = g.order();
    let mut labels = g.labels().to_vec();
    labels.extend(g.labels().iter().enumerate().map(|(a, l)| {
        if a == 0 {
            "rho".to_string()
        } else {
            format!("{l}rho")
        }
    }));
    let mut involution: Vec<usize> = (0..n).map(|a| g.inverse(a)).collect();
    involution.extend(n..2 * n);
    FusionRing::from_fn(labels, involution, |i, j, k| {
        let (a, b) = (i % n, j % n);
        match (i < n, j < n) {
            // g · h = gh
            (true, true) => i64::from(k == g.mul(a, b)),
            // g · hρ = (gh)ρ
            (true, false) => i64::from(k == n + g.mul(a, b)),
            // gρ · h = g h⁻¹ ρ
            (false, true) => i64::from(k == n + g.mul(a, g.inverse(b))),
            // gρ · hρ = g h⁻¹ + Σ_x xρ
            (false, false) => i64::from(k == g.mul(a, g.inverse(b)) || k >= n),
        }
    })
}

/// Truncated Clebsch–Gordan rules at level `k`, objects `s0..sk` (twice the spin).
pub fn su2_level(k: u32) -> Result<FusionRing, FusionError> {
    if k == 0 {
        return Err(FusionError::InvalidParams("su2_level needs k >= 1".into()));
    }
    let k = k as usize;
    let labels = (0..=k).map(|i| format!("s{i}")).collect();
    FusionRing::from_fn(labels, (0..=k).collect(), |i, j, l| {
        let lo = i.abs_diff(j);
        let hi = (i + j).min(2 * k - i - j);
        i64::from(lo <= l && l <= hi && (i + j + l) % 2 == 0)
    })
}

/// `τ² = 1 + τ`.
pub fn fibonacci() -> FusionRing {
    FusionRing::from_fn(vec!["1".into(), "tau".into()], vec![0, 1], |i, j, k| match (i, j) {
        (0, _) => i64::from(j == k),
        (_, 0) => i64::from(i == k),
        _ => 1,
    })
    .expect("Fibonacci ring")
}

/// `K(d)`: `c₁c₁ = (1/d)c₀ + ((d−1)/d)c₁`, for `d ≥ 1`.
pub fn two_element(d: &QuadScalar) -> Result<Hypergroup, FusionError> {
    if *d < QuadScalar::one() {
        return Err(FusionError::InvalidParams(format!("two_element needs d >= 1, got {d}")));
    }
    let inv = d.inverse()?;
    let rest = QuadScalar::one() - &inv;
    Ok(Hypergroup::from_fn(vec!["c0".into(), "c1".into()], vec![0, 1], |i, j, k| {
        match (i, j) {
            (0, _) => QuadScalar::from(i64::from(j == k)),
            (_, 0) => QuadScalar::from(i64::from(i == k)),
            _ if k == 0 => inv.clone(),
            _ => rest.clone(),
        }
    })?)
}

/// A fixed spread of small instances from every family, for sweeps.
pub fn sample_instances() -> Vec<(String, CatalogObject)> {
    let g = |s: &str| FiniteGroup::parse(s).expect("catalog group");
    let mut out: Vec<(String, CatalogObject)> = Vec::new();
    for name in ["Z1", "Z2", "Z3", "Z4", "Z2xZ2", "S3"] {
        out.push((format!("group({name})"), CatalogObject::Ring(FusionRing::group_ring(&g(name)))));
    }
    for name in ["Z2", "Z3", "Z2xZ2"] {
        out.push((
            format!("tambara_yamagami({name})"),
            CatalogObject::Ring(tambara_yamagami(&g(name)).unwrap()),
        ));
    }
    for (name, m) in [("Z2", 1), ("Z2", 2), ("Z3", 2), ("Z3", 3), ("Z4", 3)] {
        out.push((
            format!("near_group({name},{m})"),
            CatalogObject::Ring(near_group(&g(name), m).unwrap()),
        ));
    }
    for name in ["Z1", "Z2", "Z3"] {
        out.push((
            format!("haagerup_izumi({name})"),
            CatalogObject::Ring(haagerup_izumi(&g(name)).unwrap()),
        ));
    }
    for k in 1..=4 {
        out.push((format!("su2_level({k})"), CatalogObject::Ring(su2_level(k).unwrap())));
    }
    out.push(("fibonacci".into(), CatalogObject::Ring(fibonacci())));
    for d in ["2", "3", "(2+1*sqrt(3))/1", "(5+2*sqrt(6))/1"] {
        let d: QuadScalar = d.parse().unwrap();
        out.push((format!("two_element({d})"), CatalogObject::Hypergroup(two_element(&d).unwrap())));
    }
    out
}
