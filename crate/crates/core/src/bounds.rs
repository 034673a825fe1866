//! Exact evaluation of the explicit bound formulas. Constants that come
//! from imported results without a value are read from a
//! [`ConstantsConfig`] and never defaulted.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Results wider than this many bits are refused.
pub const MAX_RESULT_BITS: u64 = 1 << 24;

/// External constants keyed as `name(arg,arg,...)` or a bare `name`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstantsConfig {
    values: BTreeMap<String, BigUint>,
}

/// Where each external constant comes from, for error messages.
fn source_of(name: &str) -> &'static str {
    match name {
        "c_bigramsey" => "the Ramsey lemma for anticomplete paths in K_{σ,σ}-induced-minor-free graphs",
        "c_multiramsey" => "Ramsey's theorem for colourings of s-subsets",
        "c_productramsey" => "the product Ramsey theorem",
        "c_BHKM" => "the treewidth bound for graphs with a bounded-clustering edge colouring",
        "c_bettergrid" => "the polynomial grid-minor theorem",
        "c_compbip" => "the complete-bipartite induced-minor lemma",
        "c_starcomponents" => "the star-pair colouring of monochromatic components",
        "d_mainpolyblock" => "the block-to-treewidth exponent for the binary tree pattern",
        _ => "an imported result",
    }
}

/// Canonical config key.
pub fn constant_key(name: &str, args: &[BigUint]) -> String {
    if args.is_empty() {
        return name.to_string();
    }
    let parts: Vec<String> = args.iter().map(|a| a.to_string()).collect();
    format!("{name}({})", parts.join(","))
}

impl ConstantsConfig {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets a constant; the key is canonicalised by dropping whitespace.
    pub fn set(&mut self, key: &str, value: BigUint) -> Result<()> {
        if value.is_zero() {
            return Err(Error::InvalidParameter(format!("constant {key} must be positive")));
        }
        self.values.insert(key.split_whitespace().collect(), value);
        Ok(())
    }

    pub fn with(mut self, key: &str, value: u64) -> Self {
        self.set(key, BigUint::from(value)).expect("positive constant");
        self
    }

    pub fn get(&self, name: &str, args: &[BigUint]) -> Result<BigUint> {
        let key = constant_key(name, args);
        self.values.get(&key).cloned().ok_or_else(|| Error::MissingConstant {
            key,
            source_result: source_of(name).to_string(),
        })
    }

    /// Reads a JSON object mapping keys to positive integers, given as
    /// numbers or decimal strings.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: BTreeMap<String, serde_json::Value> =
            serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
        let mut cfg = ConstantsConfig::new();
        for (k, v) in raw {
            let value = match &v {
                serde_json::Value::Number(n) => n.as_u64().map(BigUint::from),
                serde_json::Value::String(s) => s.parse::<BigUint>().ok(),
                _ => None,
            }
            .ok_or_else(|| Error::InvalidParameter(format!("constant {k} is not a nonnegative integer: {v}")))?;
            cfg.set(&k, value)?;
        }
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        let map: BTreeMap<&String, String> = self.values.iter().map(|(k, v)| (k, v.to_string())).collect();
        serde_json::to_string_pretty(&map).expect("string map serialises")
    }
}

/// One evaluated formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundExpr {
    pub name: String,
    pub params: BTreeMap<String, u64>,
    /// Decimal.
    pub value: String,
    /// Named intermediate quantities, decimal.
    pub parts: BTreeMap<String, String>,
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

/// `base^exp`, refusing results above [`MAX_RESULT_BITS`].
pub fn checked_pow(base: &BigUint, exp: &BigUint) -> Result<BigUint> {
    if base.is_zero() {
        return Ok(if exp.is_zero() { BigUint::one() } else { BigUint::zero() });
    }
    if base.is_one() || exp.is_zero() {
        return Ok(BigUint::one());
    }
    let too_big = || Error::SizeLimit {
        what: "result bit length",
        actual: usize::MAX,
        limit: MAX_RESULT_BITS as usize,
    };
    let e = exp.to_u64().ok_or_else(too_big)?;
    let bits = (base.bits() - 1).checked_mul(e).ok_or_else(too_big)?;
    if bits > MAX_RESULT_BITS {
        return Err(Error::SizeLimit {
            what: "result bit length",
            actual: bits.min(usize::MAX as u64) as usize,
            limit: MAX_RESULT_BITS as usize,
        });
    }
    Ok(base.pow(e as u32))
}

pub fn binomial2(n: &BigUint) -> BigUint {
    if n < &big(2) {
        return BigUint::zero();
    }
    n * (n - 1u32) / 2u32
}

/// Pathwidth bound from treewidth below τ without a radius-ρ binary tree
/// induced minor: `τ^(6ρ+2)`.
pub fn pwtotw(rho: u64, tau: u64) -> Result<BigUint> {
    positive(&[("rho", rho), ("tau", tau)])?;
    checked_pow(&big(tau), &(big(6) * rho + 2u32))
}

/// Number of edge colours from `γ` star-pair classes.
pub fn mainedgecluster_colors(gamma: u64) -> Result<BigUint> {
    positive(&[("gamma", gamma)])?;
    Ok(binomial2(&big(gamma)))
}

/// Seedling size that guarantees θ branches: `(λt)^(σ(σ+3)(θ+2μσ)(μ−1))`.
pub fn getbranches_seedling_size(lambda: u64, t: u64, sigma: u64, theta: u64, mu: u64) -> Result<BigUint> {
    positive(&[("lambda", lambda), ("t", t), ("sigma", sigma), ("theta", theta), ("mu", mu)])?;
    let exp = big(sigma) * (sigma + 3) * (big(theta) + big(2) * mu * sigma) * (mu - 1);
    checked_pow(&(big(lambda) * t), &exp)
}

fn positive(params: &[(&str, u64)]) -> Result<()> {
    match params.iter().find(|(_, v)| *v == 0) {
        Some((k, _)) => Err(Error::InvalidParameter(format!("{k} must be positive"))),
        None => Ok(()),
    }
}

/// The recursion `ψ(a,b,1) = b − 1` and, for `c ≥ 2`,
/// `ψ(a,b,c) = σ(σ+3)(2σa+2σb)(a−1)(ψ(a′,b′,c−1)+1)` with
/// `a′ = c_bigramsey(2σb,1,σ)` and `b′ = c_bigramsey(b,b,σ)`.
/// The inner term is not evaluated when `a = 1`.
pub fn psi(a: &BigUint, b: &BigUint, c: u64, sigma: u64, cfg: &ConstantsConfig) -> Result<BigUint> {
    if a.is_zero() || b.is_zero() || c == 0 || sigma == 0 {
        return Err(Error::InvalidParameter("ψ needs a, b, c, σ ≥ 1".into()));
    }
    if c == 1 {
        return Ok(b - 1u32);
    }
    if a.is_one() {
        return Ok(BigUint::zero());
    }
    let s = big(sigma);
    let a2 = cfg.get("c_bigramsey", &[big(2) * &s * b, BigUint::one(), s.clone()])?;
    let b2 = cfg.get("c_bigramsey", &[b.clone(), b.clone(), s.clone()])?;
    let inner = psi(&a2, &b2, c - 1, sigma, cfg)?;
    Ok(&s * (&s + 3u32) * (big(2) * &s * a + big(2) * &s * b) * (a - 1u32) * (inner + 1u32))
}

/// `κ = c_multiramsey(8,3,3σ)`, `r = C(κ,2)`, `s = 2^C(r,2)` and
/// `μ = c_productramsey(r,s,σ)`, in that order.
pub fn mainpolysep_kappa_r_s_mu(sigma: u64, cfg: &ConstantsConfig) -> Result<[BigUint; 4]> {
    positive(&[("sigma", sigma)])?;
    let kappa = cfg.get("c_multiramsey", &[big(8), big(3), big(3 * sigma)])?;
    let r = binomial2(&kappa);
    let s = checked_pow(&big(2), &binomial2(&r))?;
    let mu = cfg.get("c_productramsey", &[r.clone(), s.clone(), big(sigma)])?;
    Ok([kappa, r, s, mu])
}

/// Number of clustering colours `C(γ,2)` with `γ = c_starcomponents(σ,2^(σ(σ−1)))`.
fn edge_colours_for(sigma: u64, cfg: &ConstantsConfig) -> Result<BigUint> {
    let tau = checked_pow(&big(2), &(big(sigma) * (sigma - 1)))?;
    let gamma = cfg.get("c_starcomponents", &[big(sigma), tau])?;
    Ok(binomial2(&gamma))
}

/// `h^c · 2^(cγ⁵) + cγη` with `c = c_BHKM`, `γ` the edge colour count for
/// `σ` and `η = 12σ`.
pub fn mainpolydegree_exponent(h: u64, sigma: u64, cfg: &ConstantsConfig) -> Result<BigUint> {
    positive(&[("h", h), ("sigma", sigma)])?;
    mainpolydegree_big(&big(h), &big(sigma), cfg)
}

fn mainpolydegree_big(h: &BigUint, sigma: &BigUint, cfg: &ConstantsConfig) -> Result<BigUint> {
    let c = cfg.get("c_BHKM", &[])?;
    let s = sigma.to_u64().ok_or_else(|| Error::InvalidParameter("σ too large".into()))?;
    let gamma = edge_colours_for(s, cfg)?;
    let eta = big(12) * sigma;
    let g5 = checked_pow(&gamma, &big(5))?;
    Ok(checked_pow(h, &c)? * checked_pow(&big(2), &(&c * g5))? + &c * gamma * eta)
}

/// `max{5d+1, c_bg + (56h+3)(9+c_bg)}` where `h = |V(H)| + |E(H)|`,
/// `c = c_compbip(1,h,σ,σ,σ)` and `d` the degree exponent at `(h, c)`.
pub fn subcompletesubg_exponent(h_vertices: u64, h_edges: u64, sigma: u64, cfg: &ConstantsConfig) -> Result<BigUint> {
    positive(&[("h_vertices", h_vertices), ("sigma", sigma)])?;
    let h = big(h_vertices + h_edges);
    let s = big(sigma);
    let c = cfg.get("c_compbip", &[BigUint::one(), h.clone(), s.clone(), s.clone(), s])?;
    let d = mainpolydegree_big(&h, &c, cfg)?;
    let cbg = cfg.get("c_bettergrid", &[])?;
    let grid = &cbg + (big(56) * &h + 3u32) * (big(9) + &cbg);
    Ok((big(5) * d + 1u32).max(grid))
}

/// `2σ` times the subcomplete exponent.
pub fn mainpolyblock_exponent(h_vertices: u64, h_edges: u64, sigma: u64, cfg: &ConstantsConfig) -> Result<BigUint> {
    Ok(big(2 * sigma) * subcompletesubg_exponent(h_vertices, h_edges, sigma, cfg)?)
}

/// `(6ρ+2)(c′+d′+1)d` with `c′ = κ`, `d′ = ψ(μ,2,ρ)` and
/// `d = d_mainpolyblock(ρ,σ)` read from the config.
pub fn indms_exponent(rho: u64, sigma: u64, cfg: &ConstantsConfig) -> Result<BigUint> {
    positive(&[("rho", rho), ("sigma", sigma)])?;
    let [kappa, _, _, mu] = mainpolysep_kappa_r_s_mu(sigma, cfg)?;
    let d_sep = psi(&mu, &big(2), rho, sigma, cfg)?;
    let d = cfg.get("d_mainpolyblock", &[big(rho), big(sigma)])?;
    Ok((big(6) * rho + 2u32) * (kappa + d_sep + 1u32) * d)
}

/// Every formula name [`eval_bound`] accepts, with its parameters.
pub const BOUND_NAMES: &[(&str, &[&str])] = &[
    ("pwtotw", &["rho", "tau"]),
    ("indms_exponent", &["rho", "sigma"]),
    ("mainpolyblock_exponent", &["h_vertices", "h_edges", "sigma"]),
    ("subcompletesubg_exponent", &["h_vertices", "h_edges", "sigma"]),
    ("mainpolydegree_exponent", &["h", "sigma"]),
    ("mainedgecluster_colors", &["gamma"]),
    ("mainpolysep_kappa_r_s_mu", &["sigma"]),
    ("mainpolysep_d", &["rho", "sigma"]),
    ("getbranches_seedling_size", &["lambda", "t", "sigma", "theta", "mu"]),
    ("psi", &["a", "b", "c", "sigma"]),
];

/// Evaluates a named formula.
pub fn eval_bound(name: &str, params: &BTreeMap<String, u64>, cfg: &ConstantsConfig) -> Result<BoundExpr> {
    let Some((_, wanted)) = BOUND_NAMES.iter().find(|(n, _)| *n == name) else {
        let names: Vec<&str> = BOUND_NAMES.iter().map(|(n, _)| *n).collect();
        return Err(Error::InvalidParameter(format!("unknown bound {name}; known: {}", names.join(", "))));
    };
    if let Some(extra) = params.keys().find(|k| !wanted.contains(&k.as_str())) {
        return Err(Error::InvalidParameter(format!("{name} takes no parameter {extra}")));
    }
    let p = |k: &str| {
        params
            .get(k)
            .copied()
            .ok_or_else(|| Error::InvalidParameter(format!("{name} needs parameter {k}")))
    };
    let mut parts = BTreeMap::new();
    let value = match name {
        "pwtotw" => pwtotw(p("rho")?, p("tau")?)?,
        "indms_exponent" => indms_exponent(p("rho")?, p("sigma")?, cfg)?,
        "mainpolyblock_exponent" => mainpolyblock_exponent(p("h_vertices")?, p("h_edges")?, p("sigma")?, cfg)?,
        "subcompletesubg_exponent" => subcompletesubg_exponent(p("h_vertices")?, p("h_edges")?, p("sigma")?, cfg)?,
        "mainpolydegree_exponent" => mainpolydegree_exponent(p("h")?, p("sigma")?, cfg)?,
        "mainedgecluster_colors" => mainedgecluster_colors(p("gamma")?)?,
        "mainpolysep_kappa_r_s_mu" => {
            let [kappa, r, s, mu] = mainpolysep_kappa_r_s_mu(p("sigma")?, cfg)?;
            parts.insert("kappa".to_string(), kappa.to_string());
            parts.insert("r".to_string(), r.to_string());
            parts.insert("s".to_string(), s.to_string());
            parts.insert("mu".to_string(), mu.to_string());
            mu
        }
        "mainpolysep_d" => {
            let (rho, sigma) = (p("rho")?, p("sigma")?);
            positive(&[("rho", rho)])?;
            let [kappa, _, _, mu] = mainpolysep_kappa_r_s_mu(sigma, cfg)?;
            parts.insert("c".to_string(), kappa.to_string());
            psi(&mu, &big(2), rho, sigma, cfg)?
        }
        "getbranches_seedling_size" => {
            getbranches_seedling_size(p("lambda")?, p("t")?, p("sigma")?, p("theta")?, p("mu")?)?
        }
        "psi" => psi(&big(p("a")?), &big(p("b")?), p("c")?, p("sigma")?, cfg)?,
        _ => unreachable!("listed in BOUND_NAMES"),
    };
    Ok(BoundExpr {
        name: name.to_string(),
        params: params.clone(),
        value: value.to_string(),
        parts,
    })
}

/// Parses `k=v,k=v`.
pub fn parse_params(text: &str) -> Result<BTreeMap<String, u64>> {
    let mut out = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameter(format!("expected key=value, got {item}")))?;
        let v: u64 = v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("{} is not a nonnegative integer", v.trim())))?;
        if out.insert(k.trim().to_string(), v).is_some() {
            return Err(Error::InvalidParameter(format!("parameter {} given twice", k.trim())));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(pwtotw(1, 2).unwrap(), big(256));
        assert_eq!(pwtotw(2, 3).unwrap(), big(3).pow(14));
        assert_eq!(mainedgecluster_colors(4).unwrap(), big(6));
        assert_eq!(getbranches_seedling_size(1, 2, 1, 1, 2).unwrap(), big(1 << 20));
        assert_eq!(getbranches_seedling_size(5, 3, 2, 1, 1).unwrap(), big(1));
        assert!(pwtotw(0, 2).is_err());
    }

    #[test]
    fn psi_base_and_zero_cases() {
        let cfg = ConstantsConfig::new();
        for a in 1..=10u64 {
            for b in 1..=10u64 {
                assert_eq!(psi(&big(a), &big(b), 1, 2, &cfg).unwrap(), big(b - 1));
            }
        }
        for c in 2..6 {
            assert_eq!(psi(&big(1), &big(7), c, 3, &cfg).unwrap(), BigUint::zero());
        }
    }

    #[test]
    fn psi_two_levels() {
        // σ = 1: a′ = c_bigramsey(4,1,1), b′ = c_bigramsey(2,2,1).
        let cfg = ConstantsConfig::new().with("c_bigramsey(4,1,1)", 5).with("c_bigramsey(2,2,1)", 3);
        // 1·4·(2·2+2·2)·1·((3−1)+1) = 96.
        assert_eq!(psi(&big(2), &big(2), 2, 1, &cfg).unwrap(), big(96));
        let err = psi(&big(2), &big(3), 2, 1, &cfg).unwrap_err();
        let Error::MissingConstant { key, .. } = err else { panic!("expected a missing constant") };
        assert_eq!(key, "c_bigramsey(6,1,1)");
    }

    #[test]
    fn config_round_trip() {
        let cfg = ConstantsConfig::from_json(r#"{"c_BHKM": 3, "c_bigramsey(2, 1, 1)": "123456789012345678901234567890"}"#).unwrap();
        assert_eq!(cfg.get("c_BHKM", &[]).unwrap(), big(3));
        assert_eq!(
            cfg.get("c_bigramsey", &[big(2), big(1), big(1)]).unwrap().to_string(),
            "123456789012345678901234567890"
        );
        assert_eq!(ConstantsConfig::from_json(&cfg.to_json()).unwrap(), cfg);
        assert!(ConstantsConfig::from_json(r#"{"c_BHKM": 0}"#).is_err());
        assert!(ConstantsConfig::from_json(r#"{"c_BHKM": -1}"#).is_err());
    }

    #[test]
    fn missing_constants_name_their_source() {
        let err = eval_bound("mainpolysep_kappa_r_s_mu", &parse_params("sigma=1").unwrap(), &ConstantsConfig::new())
            .unwrap_err();
        assert_eq!(
            err,
            Error::MissingConstant {
                key: "c_multiramsey(8,3,3)".into(),
                source_result: source_of("c_multiramsey").into()
            }
        );
    }

    #[test]
    fn kappa_r_s_mu() {
        let cfg = ConstantsConfig::new().with("c_multiramsey(8,3,3)", 3).with("c_productramsey(3,8,1)", 11);
        let e = eval_bound("mainpolysep_kappa_r_s_mu", &parse_params("sigma=1").unwrap(), &cfg).unwrap();
        assert_eq!(e.value, "11");
        assert_eq!(e.parts["r"], "3");
        assert_eq!(e.parts["s"], "8");
    }

    #[test]
    fn degree_chain() {
        // σ = 1: τ = 1, γ = C(c_starcomponents(1,1), 2) = C(3,2) = 3, η = 12.
        let cfg = ConstantsConfig::new()
            .with("c_BHKM", 1)
            .with("c_starcomponents(1,1)", 3)
            .with("c_compbip(1,3,1,1,1)", 1)
            .with("c_bettergrid", 1);
        // h·2^(3⁵) + 1·3·12.
        let d = mainpolydegree_exponent(2, 1, &cfg).unwrap();
        assert_eq!(d, big(2) * big(2).pow(243) + big(36));
        // Subcomplete for H = K2 (2 vertices, 1 edge): h = 3, c = 1.
        let d3 = mainpolydegree_exponent(3, 1, &cfg).unwrap();
        let sub = subcompletesubg_exponent(2, 1, 1, &cfg).unwrap();
        assert_eq!(sub, (big(5) * d3 + 1u32).max(big(1 + 171 * 10)));
        assert_eq!(mainpolyblock_exponent(2, 1, 1, &cfg).unwrap(), big(2) * sub);
    }

    #[test]
    fn oversized_results_are_refused() {
        assert!(matches!(pwtotw(1 << 40, 3), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn unknown_names_and_params() {
        let cfg = ConstantsConfig::new();
        assert!(eval_bound("nope", &BTreeMap::new(), &cfg).is_err());
        assert!(eval_bound("pwtotw", &parse_params("rho=1").unwrap(), &cfg).is_err());
        assert!(eval_bound("pwtotw", &parse_params("rho=1,tau=2,x=1").unwrap(), &cfg).is_err());
        assert_eq!(eval_bound("pwtotw", &parse_params("rho=1, tau=2").unwrap(), &cfg).unwrap().value, "256");
        assert!(parse_params("rho=1,rho=2").is_err());
    }
}
