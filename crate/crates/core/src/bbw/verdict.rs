use std::fmt;

use serde::Serialize;

use super::chamber::{chamber, even_pairings, is_typical, Chamber};
use super::characteristic::Characteristic;
use super::kempf::kempf_margins;
use crate::charring::LaurentPoly;
use crate::error::{Error, Result};
use crate::eulerchar::chi_character;
use crate::superroots::{
    dot_action, length_and_sign, walk_to_standard, Perm, SuperRootData, Weight,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VerdictTag {
    AllVanish,
    ConcentratedAt,
    VanishAbovePositive,
    Undetermined,
}

impl fmt::Display for VerdictTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The theorem licensing a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Provenance {
    /// Borel–Bott–Weil over a standard Borel.
    #[serde(rename = "bbw")]
    BorelBottWeil,
    /// The typical-weight variant over an arbitrary Borel.
    #[serde(rename = "bbw-penkov")]
    Penkov,
    /// Vanishing above degree 0 from `(λ, β_i^∨) ≥ k_i`.
    #[serde(rename = "kempf-bounds")]
    KempfBounds,
    /// Vanishing above degree 0 for typical `λ` with `λ + ρ` regular dominant.
    #[serde(rename = "kempf-typical")]
    KempfTypical,
    #[serde(rename = "gl21-w23")]
    Gl21W23,
    #[serde(rename = "gl21-w132")]
    Gl21W132,
}

impl Provenance {
    pub fn label(&self) -> &'static str {
        match self {
            Provenance::BorelBottWeil => "bbw",
            Provenance::Penkov => "bbw-penkov",
            Provenance::KempfBounds => "kempf-bounds",
            Provenance::KempfTypical => "kempf-typical",
            Provenance::Gl21W23 => "gl21-w23",
            Provenance::Gl21W132 => "gl21-w132",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    Atypical,
    /// No `u` moves `λ + ρ` into the closed fundamental region.
    NoChamberPresentation,
    BoundsNotMet,
    /// Some `(λ + ρ, β^∨) < 1`.
    NotRegularDominant,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Reason::Atypical => "atypical",
            Reason::NoChamberPresentation => "no_chamber_presentation",
            Reason::BoundsNotMet => "bounds_not_met",
            Reason::NotRegularDominant => "not_regular_dominant",
        };
        f.write_str(s)
    }
}

/// `H^{l(u)}(G/B, K_λ^ε) ≅ ind_{B'}^G K_{λ'}^{ε'}` for a standard `B' = B⁻_{w'}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Description {
    pub w_prime: Perm,
    pub lambda_prime: Weight,
    pub parity: u8,
    /// Odd reflections from `B` to `B'`.
    pub reflections: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub tag: VerdictTag,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<Reason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub description: Option<Description>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character: Option<LaurentPoly>,
}

impl Verdict {
    pub fn undetermined(provenance: Provenance, reason: Reason) -> Self {
        Verdict {
            tag: VerdictTag::Undetermined,
            degree: None,
            provenance,
            reason: Some(reason),
            description: None,
            character: None,
        }
    }

    fn decided(tag: VerdictTag, provenance: Provenance) -> Self {
        Verdict {
            tag,
            degree: None,
            provenance,
            reason: None,
            description: None,
            character: None,
        }
    }

    pub fn is_decided(&self) -> bool {
        self.tag != VerdictTag::Undetermined
    }

    /// What the verdict says about `H^k`: `Some(true)` vanishes,
    /// `Some(false)` is nonzero, `None` not determined.
    pub fn vanishes_at(&self, k: usize) -> Option<bool> {
        match self.tag {
            VerdictTag::AllVanish => Some(true),
            VerdictTag::ConcentratedAt => self.degree.map(|d| k != d),
            VerdictTag::VanishAbovePositive if k > 0 => Some(true),
            VerdictTag::VanishAbovePositive => self.character.as_ref().map(|c| c.is_zero()),
            VerdictTag::Undetermined => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag)?;
        if let Some(d) = self.degree {
            write!(f, " {d}")?;
        }
        if let Some(r) = self.reason {
            write!(f, " ({r})")?;
        }
        write!(f, " [{}]", self.provenance)
    }
}

/// Highest degree in which cohomology can be nonzero: `dim G_ev/B_ev`.
pub fn top_degree(sys: &SuperRootData) -> usize {
    let (m, n) = (sys.dim().m(), sys.dim().n());
    m * (m - 1) / 2 + n * (n - 1) / 2
}

/// Whether two verdicts on the same `(λ, ε, B, p)` can both hold.
pub fn compatible(a: &Verdict, b: &Verdict, top: usize) -> bool {
    (0..=top).all(|k| match (a.vanishes_at(k), b.vanishes_at(k)) {
        (Some(x), Some(y)) => x == y,
        _ => true,
    })
}

struct Presentation {
    length: usize,
    sign: i8,
    mu: Weight,
    chamber: Chamber,
}

fn presentations(
    lambda: &Weight,
    sys: &SuperRootData,
    p: Characteristic,
) -> Result<Vec<Presentation>> {
    let mut found = Vec::new();
    for u in sys.weyl_group() {
        let mu = dot_action(&u.inverse(), lambda, sys)?;
        let ch = chamber(&mu, sys, p)?;
        if ch.is_closed() {
            let (length, sign) = length_and_sign(&u, sys)?;
            found.push(Presentation {
                length,
                sign,
                mu,
                chamber: ch,
            });
        }
    }
    found.sort_by_key(|c| c.length);
    Ok(found)
}

/// Borel–Bott–Weil: write `λ = u.μ` with `μ` in the closed fundamental
/// region and read off the cohomology. Over a non-standard Borel the weight
/// must be typical.
pub fn bbw_verdict(
    lambda: &Weight,
    parity: u8,
    sys: &SuperRootData,
    p: Characteristic,
) -> Result<Verdict> {
    sys.dim().check_len(lambda)?;
    lambda.require_integral()?;
    let provenance = if sys.is_standard() {
        Provenance::BorelBottWeil
    } else {
        Provenance::Penkov
    };
    if provenance == Provenance::Penkov && !is_typical(lambda, sys, p)? {
        return Ok(Verdict::undetermined(provenance, Reason::Atypical));
    }
    let found = presentations(lambda, sys, p)?;
    let Some(best) = found.first() else {
        return Ok(Verdict::undetermined(
            provenance,
            Reason::NoChamberPresentation,
        ));
    };
    for other in &found[1..] {
        if other.mu != best.mu
            || other.chamber != best.chamber
            || best.chamber == Chamber::InteriorC
        {
            return Err(Error::Invariant(format!(
                "λ = {lambda} on {sys} has inconsistent chamber presentations {} and {}",
                best.mu, other.mu
            )));
        }
    }
    if best.chamber == Chamber::ClosureMinusC {
        return Ok(Verdict::decided(VerdictTag::AllVanish, provenance));
    }

    let walk = walk_to_standard(sys)?;
    let lambda_prime = &best.mu - &walk.delta_rho;
    let description = Description {
        w_prime: walk.end.w().clone(),
        lambda_prime: lambda_prime.clone(),
        parity: ((parity as usize + walk.reflections()) % 2) as u8,
        reflections: walk.reflections(),
    };
    let target = &walk.end;
    let licensed = kempf_typical_verdict(&lambda_prime, target, p)?.is_decided()
        || (target.has_standard_even_part() && kempf_verdict(&lambda_prime, target)?.is_decided());
    let character = if licensed {
        let ch = chi_character(&lambda_prime, target)?.poly;
        let here = chi_character(lambda, sys)?.poly;
        let signed = if best.sign < 0 { -&ch } else { ch.clone() };
        if here != signed {
            return Err(Error::Invariant(format!(
                "χ(B, {lambda}) ≠ (-1)^{} χ(B', {lambda_prime}) on {sys}",
                best.length
            )));
        }
        Some(ch)
    } else {
        None
    };
    Ok(Verdict {
        tag: VerdictTag::ConcentratedAt,
        degree: Some(best.length),
        provenance,
        reason: None,
        description: Some(description),
        character,
    })
}

/// Vanishing above degree 0 from the bounds `(λ, β_i^∨) ≥ k_i`; needs the
/// standard even part.
pub fn kempf_verdict(lambda: &Weight, sys: &SuperRootData) -> Result<Verdict> {
    let margins = kempf_margins(lambda, sys)?;
    if !margins.iter().all(|(b, x)| *x >= b.k as i64) {
        return Ok(Verdict::undetermined(
            Provenance::KempfBounds,
            Reason::BoundsNotMet,
        ));
    }
    let mut v = Verdict::decided(VerdictTag::VanishAbovePositive, Provenance::KempfBounds);
    v.character = Some(chi_character(lambda, sys)?.poly);
    Ok(v)
}

/// Vanishing above degree 0 for typical `λ` with `(λ + ρ, β^∨) ≥ 1` on `Φ⁺_0`.
pub fn kempf_typical_verdict(
    lambda: &Weight,
    sys: &SuperRootData,
    p: Characteristic,
) -> Result<Verdict> {
    sys.dim().check_len(lambda)?;
    lambda.require_integral()?;
    if !is_typical(lambda, sys, p)? {
        return Ok(Verdict::undetermined(
            Provenance::KempfTypical,
            Reason::Atypical,
        ));
    }
    if !even_pairings(lambda, sys)?.iter().all(|&(_, a)| a >= 1) {
        return Ok(Verdict::undetermined(
            Provenance::KempfTypical,
            Reason::NotRegularDominant,
        ));
    }
    let mut v = Verdict::decided(VerdictTag::VanishAbovePositive, Provenance::KempfTypical);
    v.character = Some(chi_character(lambda, sys)?.poly);
    Ok(v)
}

/// `H^0(G/B, K_λ^ε)` is known to be simple. `false` only means the theory
/// makes no claim.
pub fn is_simple_h0(lambda: &Weight, sys: &SuperRootData, p: Characteristic) -> Result<bool> {
    Ok(chamber(lambda, sys, p)? == Chamber::InteriorC && is_typical(lambda, sys, p)?)
}

/// Every generic verdict that applies, in the order bbw, Kempf bounds,
/// typical Kempf. The bounds verdict is skipped for a non-standard even part.
pub fn all_verdicts(
    lambda: &Weight,
    parity: u8,
    sys: &SuperRootData,
    p: Characteristic,
) -> Result<Vec<Verdict>> {
    let mut out = vec![bbw_verdict(lambda, parity, sys, p)?];
    if sys.has_standard_even_part() {
        out.push(kempf_verdict(lambda, sys)?);
    }
    out.push(kempf_typical_verdict(lambda, sys, p)?);
    Ok(out)
}

/// The first decided verdict, or the bbw one if none decides.
pub fn engine_verdict(
    lambda: &Weight,
    parity: u8,
    sys: &SuperRootData,
    p: Characteristic,
) -> Result<Verdict> {
    let all = all_verdicts(lambda, parity, sys, p)?;
    let chosen = all.iter().find(|v| v.is_decided()).unwrap_or(&all[0]);
    Ok(chosen.clone())
}

/// The generic verdicts agree with each other, and nothing proven to vanish
/// in characteristic `p` is claimed nonzero in characteristic 0.
pub fn check_consistency(
    lambda: &Weight,
    parity: u8,
    sys: &SuperRootData,
    p: Characteristic,
) -> Result<()> {
    let top = top_degree(sys);
    let here = all_verdicts(lambda, parity, sys, p)?;
    for (i, a) in here.iter().enumerate() {
        for b in &here[i + 1..] {
            if !compatible(a, b, top) {
                return Err(Error::Invariant(format!(
                    "λ = {lambda} on {sys}, p = {p}: {a} contradicts {b}"
                )));
            }
        }
    }
    if p.is_zero() {
        return Ok(());
    }
    let zero = all_verdicts(lambda, parity, sys, Characteristic::ZERO)?;
    for k in 0..=top {
        let vanishes_mod_p = here.iter().any(|v| v.vanishes_at(k) == Some(true));
        let nonzero_in_zero = zero.iter().find(|v| v.vanishes_at(k) == Some(false));
        if let (true, Some(v)) = (vanishes_mod_p, nonzero_in_zero) {
            return Err(Error::Invariant(format!(
                "λ = {lambda} on {sys}: H^{k} vanishes for p = {p} but {v} in characteristic 0"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: u64) -> Characteristic {
        Characteristic::new(x).unwrap()
    }

    fn w23() -> SuperRootData {
        SuperRootData::from_word(2, 1, &[1, 3, 2]).unwrap()
    }

    fn l(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    #[test]
    fn concentrated_in_degree_zero() {
        let v = bbw_verdict(&l(&[1, 0, 5]), 0, &w23(), p(0)).unwrap();
        assert_eq!(
            (v.tag, v.degree, v.provenance),
            (VerdictTag::ConcentratedAt, Some(0), Provenance::Penkov)
        );
        let d = v.description.unwrap();
        assert_eq!(d.w_prime.to_string(), "3,1,2");
        assert_eq!(d.lambda_prime, l(&[0, 0, 6]));
        assert_eq!(d.parity, 1);
        assert!(v.character.is_some());
    }

    #[test]
    fn wall_and_atypical() {
        let v = bbw_verdict(&l(&[0, 0, 3]), 0, &w23(), p(0)).unwrap();
        assert_eq!(v.tag, VerdictTag::AllVanish);
        let a = bbw_verdict(&l(&[1, 1, -1]), 0, &w23(), p(0)).unwrap();
        assert_eq!(
            (a.tag, a.reason),
            (VerdictTag::Undetermined, Some(Reason::Atypical))
        );
    }

    #[test]
    fn degree_one_via_reflection() {
        let v = bbw_verdict(&l(&[-1, 0, 4]), 0, &w23(), p(0)).unwrap();
        assert_eq!((v.tag, v.degree), (VerdictTag::ConcentratedAt, Some(1)));
    }

    #[test]
    fn no_presentation_in_positive_characteristic() {
        let v = bbw_verdict(&l(&[4, 0, 1]), 0, &w23(), p(2)).unwrap();
        assert_eq!(v.reason, Some(Reason::NoChamberPresentation));
    }

    #[test]
    fn kempf_examples() {
        assert_eq!(
            kempf_verdict(&l(&[2, 0, 7]), &w23()).unwrap().tag,
            VerdictTag::VanishAbovePositive
        );
        assert_eq!(
            kempf_verdict(&l(&[1, 0, 7]), &w23()).unwrap().reason,
            Some(Reason::BoundsNotMet)
        );
        assert_eq!(
            kempf_verdict(&l(&[10, 0, -3]), &w23()).unwrap().tag,
            VerdictTag::VanishAbovePositive
        );
        let t = kempf_typical_verdict(&l(&[1, 0, 5]), &w23(), p(0)).unwrap();
        assert_eq!(t.tag, VerdictTag::VanishAbovePositive);
        let a = kempf_typical_verdict(&l(&[1, 1, -1]), &w23(), p(0)).unwrap();
        assert_eq!(a.reason, Some(Reason::Atypical));
        let z = kempf_typical_verdict(&l(&[0, 0, 5]), &w23(), p(0)).unwrap();
        assert_eq!(z.reason, Some(Reason::NotRegularDominant));
    }

    #[test]
    fn simplicity_claims() {
        assert!(is_simple_h0(&l(&[1, 0, 5]), &w23(), p(0)).unwrap());
        assert!(!is_simple_h0(&l(&[1, 1, -1]), &w23(), p(0)).unwrap());
        assert!(!is_simple_h0(&l(&[0, 0, 5]), &w23(), p(0)).unwrap());
    }

    #[test]
    fn standard_route_needs_no_typicality() {
        let sys = SuperRootData::from_word(2, 1, &[1, 2, 3]).unwrap();
        let v = bbw_verdict(&l(&[0, 0, 0]), 0, &sys, p(0)).unwrap();
        assert_eq!(
            (v.tag, v.provenance),
            (VerdictTag::ConcentratedAt, Provenance::BorelBottWeil)
        );
    }

    #[test]
    fn json_shape() {
        let v = bbw_verdict(&l(&[1, 0, 5]), 0, &w23(), p(0)).unwrap();
        let j = serde_json::to_value(&v).unwrap();
        assert_eq!(j["tag"], "ConcentratedAt");
        assert_eq!(j["degree"], 0);
        assert_eq!(j["provenance"], "bbw-penkov");
        assert_eq!(j["description"]["w_prime"], serde_json::json!([3, 1, 2]));
        let u = serde_json::to_value(Verdict::undetermined(
            Provenance::KempfBounds,
            Reason::BoundsNotMet,
        ))
        .unwrap();
        assert_eq!(u["reason"], "bounds_not_met");
        assert!(u.get("degree").is_none());
    }

    #[test]
    fn consistency_on_small_box() {
        for sys in [w23(), SuperRootData::from_word(2, 1, &[3, 1, 2]).unwrap()] {
            for q in [0, 2, 3] {
                for a in -3..=3 {
                    for b in -3..=3 {
                        for c in -3..=3 {
                            check_consistency(&l(&[a, b, c]), 0, &sys, p(q)).unwrap();
                        }
                    }
                }
            }
        }
    }
}
