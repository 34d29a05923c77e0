//! Complete `H^0` / `H^1` answers for `GL(2|1)` over the Borels
//! `w = (23)` (one-line `1,3,2`) and `w = (132)` (one-line `3,1,2`), in any
//! characteristic. Both have `Φ⁺_0 = {β = ε₁ - ε₂}` and all higher
//! cohomology vanishes.

use std::fmt;

use serde::Serialize;

use crate::bbw::{
    all_verdicts, check_consistency, is_typical, one_dim_weight, Characteristic, Provenance,
    Verdict, VerdictTag,
};
use crate::charring::LaurentPoly;
use crate::error::{Error, Result};
use crate::eulerchar::chi_character;
use crate::superroots::{Perm, SuperRootData, Superdim, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Gl21System {
    W23,
    W132,
}

impl Gl21System {
    pub const ALL: [Gl21System; 2] = [Gl21System::W23, Gl21System::W132];

    pub fn word(&self) -> [usize; 3] {
        match self {
            Gl21System::W23 => [1, 3, 2],
            Gl21System::W132 => [3, 1, 2],
        }
    }

    pub fn system(&self) -> SuperRootData {
        SuperRootData::from_word(2, 1, &self.word()).expect("fixed GL(2|1) word")
    }

    pub fn provenance(&self) -> Provenance {
        match self {
            Gl21System::W23 => Provenance::Gl21W23,
            Gl21System::W132 => Provenance::Gl21W132,
        }
    }

    /// The matching system, if `sys` is one of the two.
    pub fn of(sys: &SuperRootData) -> Option<Gl21System> {
        let dim = sys.dim();
        if (dim.m(), dim.n()) != (2, 1) {
            return None;
        }
        Gl21System::ALL
            .into_iter()
            .find(|s| sys.w().one_line() == s.word())
    }
}

impl fmt::Display for Gl21System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = Perm::from_one_line(&self.word()).expect("fixed word");
        write!(f, "{w}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "tag")]
pub enum Cohomology {
    Zero,
    Nonzero {
        character: LaurentPoly,
    },
    /// The one-dimensional module of weight `λ`.
    OneDim {
        weight: Weight,
    },
}

impl Cohomology {
    pub fn is_zero(&self) -> bool {
        matches!(self, Cohomology::Zero)
    }

    pub fn character(&self) -> Option<LaurentPoly> {
        match self {
            Cohomology::Zero => None,
            Cohomology::Nonzero { character } => Some(character.clone()),
            Cohomology::OneDim { weight } => Some(LaurentPoly::exp(weight)),
        }
    }

    fn label(&self) -> &'static str {
        match self {
            Cohomology::Zero => "Zero",
            Cohomology::Nonzero { .. } => "Nonzero",
            Cohomology::OneDim { .. } => "OneDim",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gl21Answer {
    pub system: Gl21System,
    pub provenance: Provenance,
    pub lambda: Weight,
    pub parity: u8,
    pub characteristic: Characteristic,
    pub h0: Cohomology,
    pub h1: Cohomology,
    /// `(λ, β^∨) = λ₁ - λ₂`.
    pub regime: i64,
    pub atypical: bool,
}

impl Gl21Answer {
    /// `H^k`, zero for `k ≥ 2`.
    pub fn degree(&self, k: usize) -> &Cohomology {
        match k {
            0 => &self.h0,
            1 => &self.h1,
            _ => &Cohomology::Zero,
        }
    }

    pub fn summary(&self) -> String {
        format!("{}/{}", self.h0.label(), self.h1.label())
    }
}

struct Inputs<'a> {
    system: Gl21System,
    sys: SuperRootData,
    lambda: &'a Weight,
    parity: u8,
    p: Characteristic,
    regime: i64,
    atypical: bool,
}

fn prepare(
    lambda: &Weight,
    parity: u8,
    system: Gl21System,
    p: Characteristic,
) -> Result<Inputs<'_>> {
    let sys = system.system();
    sys.dim().check_len(lambda)?;
    let ints = lambda.to_ints()?;
    let atypical = !is_typical(lambda, &sys, p)?;
    Ok(Inputs {
        system,
        sys,
        lambda,
        parity: parity % 2,
        p,
        regime: ints[0] - ints[1],
        atypical,
    })
}

fn answer(x: Inputs<'_>, h0: Cohomology, h1: Cohomology) -> Result<Gl21Answer> {
    let Inputs {
        system,
        sys,
        lambda,
        parity,
        p,
        regime,
        atypical,
    } = x;
    let out = Gl21Answer {
        system,
        provenance: system.provenance(),
        lambda: lambda.clone(),
        parity,
        characteristic: p,
        h0,
        h1,
        regime,
        atypical,
    };
    let chi = chi_character(lambda, &sys)?.poly;
    let nvars = lambda.len();
    let ch = |c: &Cohomology| c.character().unwrap_or_else(|| LaurentPoly::zero(nvars));
    if &ch(&out.h0) - &ch(&out.h1) != chi {
        return Err(Error::Invariant(format!(
            "{system} λ = {lambda}: ch H^0 - ch H^1 ≠ χ for {}",
            out.summary()
        )));
    }
    for c in [&out.h0, &out.h1] {
        if let Cohomology::Nonzero { character } = c {
            if character.is_zero() {
                return Err(Error::Invariant(format!(
                    "{system} λ = {lambda}: nonzero class with zero character"
                )));
            }
        }
    }
    Ok(out)
}

fn nonzero(character: LaurentPoly) -> Cohomology {
    Cohomology::Nonzero { character }
}

pub fn classify_23(lambda: &Weight, parity: u8, p: Characteristic) -> Result<Gl21Answer> {
    let x = prepare(lambda, parity, Gl21System::W23, p)?;
    let (h0, h1) = if x.regime >= 1 {
        (
            nonzero(chi_character(lambda, &x.sys)?.poly),
            Cohomology::Zero,
        )
    } else if x.regime == 0 {
        let one_dim = one_dim_weight(lambda, x.sys.dim(), p)?;
        if one_dim != x.atypical {
            return Err(Error::Invariant(format!(
                "λ = {lambda}, p = {p}: one-dimensional form and atypicality disagree"
            )));
        }
        if one_dim {
            let c = Cohomology::OneDim {
                weight: lambda.clone(),
            };
            (c.clone(), c)
        } else {
            (Cohomology::Zero, Cohomology::Zero)
        }
    } else {
        (
            Cohomology::Zero,
            nonzero(-&chi_character(lambda, &x.sys)?.poly),
        )
    };
    answer(x, h0, h1)
}

pub fn classify_132(lambda: &Weight, parity: u8, p: Characteristic) -> Result<Gl21Answer> {
    let x = prepare(lambda, parity, Gl21System::W132, p)?;
    let (h0, h1) = if x.regime >= 0 {
        (
            nonzero(chi_character(lambda, &x.sys)?.poly),
            Cohomology::Zero,
        )
    } else if x.regime == -1 {
        (Cohomology::Zero, Cohomology::Zero)
    } else {
        (
            Cohomology::Zero,
            nonzero(-&chi_character(lambda, &x.sys)?.poly),
        )
    };
    answer(x, h0, h1)
}

pub fn classify(
    lambda: &Weight,
    parity: u8,
    system: Gl21System,
    p: Characteristic,
) -> Result<Gl21Answer> {
    match system {
        Gl21System::W23 => classify_23(lambda, parity, p),
        Gl21System::W132 => classify_132(lambda, parity, p),
    }
}

/// The golden answer next to every generic verdict on the same input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Crosscheck {
    pub golden: Gl21Answer,
    pub generic: Vec<Verdict>,
    pub contradictions: Vec<String>,
}

impl Crosscheck {
    pub fn is_clean(&self) -> bool {
        self.contradictions.is_empty()
    }
}

pub fn crosscheck_engine(
    lambda: &Weight,
    parity: u8,
    p: Characteristic,
    system: Gl21System,
) -> Result<Crosscheck> {
    let golden = classify(lambda, parity, system, p)?;
    let sys = system.system();
    let generic = all_verdicts(lambda, parity, &sys, p)?;
    let mut contradictions = Vec::new();
    for v in &generic {
        for k in 0..=2 {
            let truth = golden.degree(k).is_zero();
            if let Some(claim) = v.vanishes_at(k) {
                if claim != truth {
                    contradictions.push(format!(
                        "{v} says H^{k} {} but golden {} gives {}",
                        if claim { "vanishes" } else { "is nonzero" },
                        system,
                        golden.summary()
                    ));
                }
            }
        }
        let degree = match v.tag {
            VerdictTag::ConcentratedAt => v.degree,
            VerdictTag::VanishAbovePositive => Some(0),
            _ => None,
        };
        if let (Some(d), Some(c)) = (degree, &v.character) {
            let golden_char = golden.degree(d).character();
            if !(golden_char.as_ref() == Some(c) || (c.is_zero() && golden_char.is_none())) {
                contradictions.push(format!(
                    "{v}: character of H^{d} differs from the golden one"
                ));
            }
        }
    }
    if let Err(e) = check_consistency(lambda, parity, &sys, p) {
        contradictions.push(e.to_string());
    }
    Ok(Crosscheck {
        golden,
        generic,
        contradictions,
    })
}

/// `GL(2|1)` dimension check used by callers that take `(m, n)` separately.
pub fn require_gl21(dim: Superdim) -> Result<()> {
    if (dim.m(), dim.n()) != (2, 1) {
        return Err(Error::WrongGroup {
            expected_m: 2,
            expected_n: 1,
            m: dim.m(),
            n: dim.n(),
        });
    }
    Ok(())
}
