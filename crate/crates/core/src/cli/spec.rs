use std::path::Path;

use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::abelian::FinAbGroup;
use crate::error::{Error, Result};
use crate::multicurve::{Curve, Efg, ModelKind};
use crate::ringkit::text::{parse_expr, parse_poly, parse_ring, parse_value, ring_symbol};
use crate::ringkit::{BaseRing, Elem, Ring};

/// Truncation used when a spec omits one.
pub const DEFAULT_WORK_PRECISION: usize = 3;

/// `EFGC_WORK_PRECISION`, falling back to the default.
pub fn work_precision() -> usize {
    std::env::var("EFGC_WORK_PRECISION")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n| n > 0)
        .unwrap_or(DEFAULT_WORK_PRECISION)
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpec {
    pub group: Vec<u64>,
    pub truncation: Option<usize>,
    pub base: Option<BaseSpec>,
    pub model: ModelBlock,
    #[serde(default)]
    pub options: Options,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseSpec {
    pub ring: String,
}

/// A builtin family with its character values, or explicit `(f, σ, ι, φ)`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelBlock {
    pub builtin: String,
    #[serde(default)]
    pub gens: Vec<String>,
    pub f: Option<String>,
    pub sigma: Option<String>,
    pub iota: Option<String>,
    #[serde(default)]
    pub phi: Vec<String>,
    pub norm_unit: Option<String>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub max_n: Option<i64>,
    pub cutoff: Option<usize>,
    pub expr: Option<String>,
}

/// A parsed spec with the hex SHA-256 of its source text.
#[derive(Clone, Debug)]
pub struct LoadedSpec {
    pub spec: ModelSpec,
    pub digest: String,
}

pub fn digest_bytes(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn parse_spec(text: &str) -> Result<LoadedSpec> {
    let spec: ModelSpec = toml::from_str(text).map_err(|e| Error::Parse(e.message().to_string()))?;
    Ok(LoadedSpec { spec, digest: digest_bytes(text.as_bytes()) })
}

pub fn load_spec(path: &Path) -> Result<LoadedSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_spec(&text)
}

impl ModelSpec {
    pub fn truncation(&self) -> usize {
        self.truncation.unwrap_or_else(work_precision)
    }

    fn base_ring(&self) -> Result<BaseRing> {
        match &self.base {
            Some(b) => parse_ring(&b.ring),
            None => Ok(BaseRing::integers()),
        }
    }

    fn gens(&self, k: &BaseRing) -> Result<Vec<Elem>> {
        self.model.gens.iter().map(|s| parse_value(k, s)).collect()
    }

    /// The model; explicit data is checked only when `validate` is set.
    pub fn build(&self, validate: bool) -> Result<Efg> {
        let group = FinAbGroup::new(self.group.clone())?;
        let n = self.truncation();
        let m = &self.model;
        match m.builtin.as_str() {
            "multiplicative" => {
                let k = self.base_ring()?;
                Efg::multiplicative(&k, &group, &self.gens(&k)?, n)
            }
            "multiplicative_universal" => Efg::multiplicative_universal(&self.base_ring()?, &group, n),
            "additive" => {
                let k = self.base_ring()?;
                let gens = if m.gens.is_empty() { vec![k.zero(); group.rank()] } else { self.gens(&k)? };
                Efg::additive(&k, &group, &gens, n)
            }
            "product_over_field" => {
                let k = self.base_ring()?;
                Efg::product_over_field(&k, &group, &self.gens(&k)?, n)
            }
            "counterexample" => {
                if group.factors() != [2] {
                    return Err(Error::ValidationFailed("the counterexample uses A = Z/2".into()));
                }
                Efg::counterexample(n)
            }
            "explicit" => self.explicit(group, n, validate),
            other => Err(Error::Parse(format!("unknown builtin {other:?}"))),
        }
    }

    fn explicit(&self, group: FinAbGroup, n: usize, validate: bool) -> Result<Efg> {
        let k = self.base_ring()?;
        let m = &self.model;
        let need = |o: &Option<String>, what: &str| o.clone().ok_or_else(|| Error::Parse(format!("explicit model needs {what}")));
        let f = parse_poly(&k, "x", &need(&m.f, "f")?)?;
        let curve = Curve::new(&k, f, n)?;
        let r = curve.ring();
        let t = curve.tensor();
        let sigma = parse_expr(&need(&m.sigma, "sigma")?)?.eval(t, &|s: &str| match s {
            "x0" => Ok(curve.tensor_x0()),
            "x1" => Ok(curve.tensor_x1()),
            other => Ok(t.constant(&curve.constant(&ring_symbol(&k, other)?))),
        })?;
        let iota = parse_expr(&need(&m.iota, "iota")?)?.eval(r, &|s: &str| match s {
            "x" => Ok(curve.x()),
            other => Ok(curve.constant(&ring_symbol(&k, other)?)),
        })?;
        let phi: Vec<Elem> = m.phi.iter().map(|s| parse_value(&k, s)).collect::<Result<_>>()?;
        let unit = match &m.norm_unit {
            Some(s) => parse_value(&k, s)?,
            None => k.one(),
        };
        if validate {
            Efg::explicit(curve, group, sigma, iota, phi, unit)
        } else {
            Efg::from_parts(curve, group, ModelKind::Explicit, sigma, iota, phi, unit)
        }
    }
}
