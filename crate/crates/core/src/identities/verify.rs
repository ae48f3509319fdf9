use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use super::chars::{char_side_for, CharMember};
use super::sec5::{exact_closed_form, h_k, hyper_bose_integral, j_k, Range};
use super::sides::{
    check_z, erf1_dual, erf1_side, erf2_dual, erf2_side, mrram_side, mrram_xi, ram_theta_dual,
    ram_theta_side, xi_side_erf1,
};
use super::Evaluated;
use crate::characters::{character, CharacterTable};
use crate::error::{Error, Result};
use crate::quad::QuadConfig;
use crate::C64;

/// Largest k accepted for the section-five families.
pub const MAX_K: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityKind {
    Erf1,
    Erf2,
    RamTheta,
    CharEven,
    CharOdd,
    MrramLimit,
    HTransform,
    JTransform,
    ExactCor,
    ExactNeg,
    ExactFull,
    RamtranI,
    RamtranIii,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 13] = [
        IdentityKind::Erf1,
        IdentityKind::Erf2,
        IdentityKind::RamTheta,
        IdentityKind::CharEven,
        IdentityKind::CharOdd,
        IdentityKind::MrramLimit,
        IdentityKind::HTransform,
        IdentityKind::JTransform,
        IdentityKind::ExactCor,
        IdentityKind::ExactNeg,
        IdentityKind::ExactFull,
        IdentityKind::RamtranI,
        IdentityKind::RamtranIii,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Erf1 => "erf1",
            IdentityKind::Erf2 => "erf2",
            IdentityKind::RamTheta => "ram-theta",
            IdentityKind::CharEven => "char-even",
            IdentityKind::CharOdd => "char-odd",
            IdentityKind::MrramLimit => "mrram-limit",
            IdentityKind::HTransform => "h-transform",
            IdentityKind::JTransform => "j-transform",
            IdentityKind::ExactCor => "exact-cor",
            IdentityKind::ExactNeg => "exact-neg",
            IdentityKind::ExactFull => "exact-full",
            IdentityKind::RamtranI => "ramtran-i",
            IdentityKind::RamtranIii => "ramtran-iii",
        }
    }

    pub fn uses_z(self) -> bool {
        matches!(
            self,
            IdentityKind::Erf1
                | IdentityKind::Erf2
                | IdentityKind::RamTheta
                | IdentityKind::CharEven
                | IdentityKind::CharOdd
        )
    }

    pub fn uses_k(self) -> bool {
        matches!(
            self,
            IdentityKind::HTransform
                | IdentityKind::JTransform
                | IdentityKind::ExactCor
                | IdentityKind::ExactNeg
                | IdentityKind::ExactFull
                | IdentityKind::RamtranI
                | IdentityKind::RamtranIii
        )
    }

    pub fn uses_q(self) -> bool {
        matches!(self, IdentityKind::CharEven | IdentityKind::CharOdd)
    }

    /// The exact evaluations live at alpha = pi and ignore the alpha field.
    pub fn uses_alpha(self) -> bool {
        !matches!(
            self,
            IdentityKind::ExactCor | IdentityKind::ExactNeg | IdentityKind::ExactFull
        )
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = IdentityKind::ALL.iter().map(|k| k.name()).collect();
                Error::Parameter(format!(
                    "unknown identity '{s}', expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Pass threshold for residuals between sides.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            rel: 1e-9,
            abs: 1e-10,
        }
    }
}

/// One verification job.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCase {
    pub identity: IdentityKind,
    pub alpha: f64,
    pub z: C64,
    pub k: u32,
    pub q: u32,
    pub cfg: QuadConfig,
    pub tol: Tolerance,
}

impl IdentityCase {
    pub fn new(identity: IdentityKind, alpha: f64) -> Self {
        Self {
            identity,
            alpha,
            z: C64::new(0.0, 0.0),
            k: 0,
            q: 0,
            cfg: QuadConfig::default(),
            tol: Tolerance::default(),
        }
    }

    pub fn with_z(mut self, z: C64) -> Self {
        self.z = z;
        self
    }

    pub fn with_k(mut self, k: u32) -> Self {
        self.k = k;
        self
    }

    pub fn with_q(mut self, q: u32) -> Self {
        self.q = q;
        self
    }

    pub fn with_cfg(mut self, cfg: QuadConfig) -> Self {
        self.cfg = cfg;
        self
    }

    pub fn with_tol(mut self, tol: Tolerance) -> Self {
        self.tol = tol;
        self
    }

    /// Check the parameters against the identity's preconditions.
    pub fn validate(&self) -> Result<()> {
        self.cfg.validate()?;
        if !(self.tol.rel >= 0.0 && self.tol.abs >= 0.0) {
            return Err(Error::Parameter("tolerances must be non-negative".into()));
        }
        if self.identity.uses_alpha() && !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return Err(Error::Parameter(format!(
                "alpha must be positive, got {}",
                self.alpha
            )));
        }
        if !(self.z.re.is_finite() && self.z.im.is_finite()) {
            return Err(Error::Parameter("z must be finite".into()));
        }
        if self.identity.uses_z() {
            check_z(self.z)?;
        }
        if self.identity.uses_k() && self.k > MAX_K {
            return Err(Error::Parameter(format!(
                "k must be at most {MAX_K}, got {}",
                self.k
            )));
        }
        if self.identity.uses_q() {
            self.character()?;
        }
        Ok(())
    }

    fn character(&self) -> Result<CharacterTable> {
        let want_odd = self.identity == IdentityKind::CharOdd;
        let chi = if self.q == 8 {
            crate::characters::character_with_parity(8, want_odd)?
        } else {
            character(self.q)?
        };
        if chi.is_even() == want_odd {
            let parity = if chi.is_even() { "even" } else { "odd" };
            return Err(Error::Parameter(format!(
                "the character modulo {} is {parity}; use {}",
                self.q,
                if chi.is_even() {
                    "char-even"
                } else {
                    "char-odd"
                }
            )));
        }
        Ok(chi)
    }
}

/// One evaluated member of an identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Side {
    pub label: String,
    pub value: C64,
    pub err: f64,
}

/// A member that could not be evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct SideFailure {
    pub label: String,
    pub error: Error,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRecord {
    pub case: IdentityCase,
    pub sides: Vec<Side>,
    pub failures: Vec<SideFailure>,
    /// |side_i - side_j| for i < j, in lexicographic pair order.
    pub residuals: Vec<f64>,
    /// The threshold each residual was compared against.
    pub threshold: f64,
    pub passed: bool,
    pub wall_ms: f64,
}

impl VerificationRecord {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

type Member<'a> = (String, Box<dyn FnOnce() -> Result<Evaluated> + 'a>);

fn members(case: &IdentityCase) -> Result<Vec<Member<'_>>> {
    let a = case.alpha;
    let z = case.z;
    let cfg = &case.cfg;
    let k = case.k;
    let b1 = 1.0 / a;
    let b5 = PI * PI / a;
    let real = |r: Result<super::sec5::RealEvaluated>| {
        r.map(|v| Evaluated {
            value: C64::new(v.value, 0.0),
            err: v.err,
        })
    };
    let neg = |r: Result<Evaluated>| {
        r.map(|v| Evaluated {
            value: -v.value,
            err: v.err,
        })
    };
    let m: Vec<Member<'_>> = match case.identity {
        IdentityKind::Erf1 => vec![
            (
                "erf1(alpha,z)".into(),
                Box::new(move || erf1_side(a, z, cfg)),
            ),
            (
                "erf1-dual(beta,z)".into(),
                Box::new(move || erf1_dual(b1, z, cfg)),
            ),
            (
                "xi-integral(alpha,z)".into(),
                Box::new(move || xi_side_erf1(a, z, cfg)),
            ),
        ],
        IdentityKind::Erf2 => vec![
            (
                "erf2(alpha,z)".into(),
                Box::new(move || erf2_side(a, z, cfg)),
            ),
            (
                "erf2-dual(beta,z)".into(),
                Box::new(move || erf2_dual(b1, z, cfg)),
            ),
        ],
        IdentityKind::RamTheta => vec![
            (
                "theta(alpha,z)".into(),
                Box::new(move || ram_theta_side(a, z, cfg)),
            ),
            (
                "theta-dual(beta,z)".into(),
                Box::new(move || ram_theta_dual(b1, z, cfg)),
            ),
        ],
        IdentityKind::CharEven | IdentityKind::CharOdd => {
            let chi = case.character()?;
            let chi2 = chi.clone();
            let chi3 = chi.clone();
            vec![
                (
                    "integral(alpha,z)".into(),
                    Box::new(move || char_side_for(&chi, a, z, CharMember::IntegralAlpha, cfg)),
                ),
                (
                    "integral(beta,z)".into(),
                    Box::new(move || char_side_for(&chi2, a, z, CharMember::IntegralBeta, cfg)),
                ),
                (
                    "xi-integral(alpha,z)".into(),
                    Box::new(move || char_side_for(&chi3, a, z, CharMember::XiIntegral, cfg)),
                ),
            ]
        }
        IdentityKind::MrramLimit => vec![
            ("limit(alpha)".into(), Box::new(move || mrram_side(a, cfg))),
            ("limit(beta)".into(), Box::new(move || mrram_side(b1, cfg))),
            (
                "xi-integral(alpha)".into(),
                Box::new(move || mrram_xi(a, cfg)),
            ),
        ],
        IdentityKind::HTransform => vec![
            (
                "h(alpha)".into(),
                Box::new(move || real(h_k(a, k, Range::Positive, cfg))),
            ),
            (
                "h(beta)".into(),
                Box::new(move || real(h_k(b5, k, Range::Positive, cfg))),
            ),
        ],
        IdentityKind::JTransform => vec![
            (
                "j(alpha)".into(),
                Box::new(move || real(j_k(a, k, Range::Positive, cfg))),
            ),
            (
                "-j(beta)".into(),
                Box::new(move || neg(real(j_k(b5, k, Range::Positive, cfg)))),
            ),
        ],
        IdentityKind::RamtranI => vec![
            (
                "h-full(alpha)".into(),
                Box::new(move || real(h_k(a, k, Range::Full, cfg))),
            ),
            (
                "h-full(beta)".into(),
                Box::new(move || real(h_k(b5, k, Range::Full, cfg))),
            ),
        ],
        IdentityKind::RamtranIii => vec![
            (
                "j-full(alpha)".into(),
                Box::new(move || real(j_k(a, k, Range::Full, cfg))),
            ),
            (
                "-j-full(beta)".into(),
                Box::new(move || neg(real(j_k(b5, k, Range::Full, cfg)))),
            ),
        ],
        IdentityKind::ExactCor | IdentityKind::ExactNeg | IdentityKind::ExactFull => {
            let range = match case.identity {
                IdentityKind::ExactCor => Range::Positive,
                IdentityKind::ExactNeg => Range::Negative,
                _ => Range::Full,
            };
            vec![
                (
                    "integral".into(),
                    Box::new(move || {
                        hyper_bose_integral(PI, 2 * k + 1, range, cfg).map(|q| Evaluated {
                            value: q.value,
                            err: q.err_estimate,
                        })
                    }),
                ),
                (
                    "closed-form".into(),
                    Box::new(move || {
                        Ok(Evaluated {
                            value: C64::new(exact_closed_form(k, range), 0.0),
                            err: 0.0,
                        })
                    }),
                ),
            ]
        }
    };
    Ok(m)
}

/// Evaluate every member of the identity and compare them pairwise.
pub fn verify(case: &IdentityCase) -> Result<VerificationRecord> {
    case.validate()?;
    let start = Instant::now();
    let mut sides = Vec::new();
    let mut failures = Vec::new();
    for (label, eval) in members(case)? {
        match eval() {
            Ok(v) => sides.push(Side {
                label,
                value: v.value,
                err: v.err,
            }),
            Err(error) => failures.push(SideFailure { label, error }),
        }
    }
    let mut residuals = Vec::new();
    for i in 0..sides.len() {
        for j in (i + 1)..sides.len() {
            residuals.push((sides[i].value - sides[j].value).norm());
        }
    }
    let scale = sides.iter().map(|s| s.value.norm()).fold(0.0, f64::max);
    let budget: f64 = sides.iter().map(|s| s.err).sum();
    let threshold = case.tol.abs.max(case.tol.rel * scale) + budget;
    let passed =
        failures.is_empty() && sides.len() >= 2 && residuals.iter().all(|&r| r <= threshold);
    Ok(VerificationRecord {
        case: case.clone(),
        sides,
        failures,
        residuals,
        threshold,
        passed,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}
