//! Admissibility audits: does some exponential lift of a torsion character
//! achieve the twisted cohomology dimension in the Aomoto complex?
//!
//! A character coordinate `q_i` in `[0, 1)` lifts to any rational `q_i + z`
//! with integer `z`; a lift of the character is such a vector that is also a
//! valid one-form (pairs to zero with every relator's exponent vector). The
//! audits here search a finite sup-norm box of integer offsets, so a failed
//! search is inconclusive — absence in a box never proves a zero lift or an
//! equality witness does not exist further out. The dimension comparison is
//! only meaningful as 1-admissibility when the group is 1-formal, so reports
//! carry the presentation's formality flag, and a strict failure of the
//! expected inequality on a formal-flagged input is surfaced as a
//! formality-violation diagnostic rather than silently recorded.

use crate::charvar::{generic_h1_dim_along, twisted_h1_dim, Character, TorusSpec};
use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::fox::Presentation;
use crate::resonance::{cup_data, OneForm};

/// Upper bound on the number of integer offsets a lift search may enumerate;
/// the box volume `(2R+1)^n` is exponential in the generator count, so big
/// boxes on big groups are rejected instead of silently grinding.
pub const LIFT_ENUM_LIMIT: u64 = 200_000;

/// Sup-norm search window for integer lift offsets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LiftBox {
    radius: u64,
}

impl LiftBox {
    pub fn new(radius: u64) -> Self {
        LiftBox { radius }
    }

    pub fn radius(&self) -> u64 {
        self.radius
    }
}

impl Default for LiftBox {
    fn default() -> Self {
        LiftBox { radius: 2 }
    }
}

/// All integer offsets of sup-norm at most `r` in dimension `n`, ordered by
/// sup-norm first and lexicographically within each shell, so enumeration
/// (and hence every reported witness) is deterministic.
fn box_offsets(n: usize, r: u64) -> Result<Vec<Vec<i64>>> {
    let side = 2 * r + 1;
    let volume = (0..n).try_fold(1u64, |acc, _| {
        acc.checked_mul(side).filter(|v| *v <= LIFT_ENUM_LIMIT)
    });
    if volume.is_none() {
        return Err(Error::SizeLimit(format!(
            "lift box holds more than {LIFT_ENUM_LIMIT} offsets"
        )));
    }
    let r = r as i64;
    let mut offsets = vec![Vec::new()];
    for _ in 0..n {
        offsets = offsets
            .into_iter()
            .flat_map(|prefix| {
                (-r..=r).map(move |v| {
                    let mut z = prefix.clone();
                    z.push(v);
                    z
                })
            })
            .collect();
    }
    offsets.sort_by_key(|z| {
        (
            z.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0),
            z.clone(),
        )
    });
    Ok(offsets)
}

/// Every lift of the character inside the box that is a valid one-form, in
/// the deterministic box order.
pub fn exp_lift_candidates(
    p: &Presentation,
    chi: &Character,
    lift_box: LiftBox,
) -> Result<Vec<OneForm>> {
    chi.check(p)?;
    let mut out = Vec::new();
    for z in box_offsets(p.num_gens(), lift_box.radius())? {
        let coords: Vec<Rat> = chi
            .coords()
            .iter()
            .zip(&z)
            .map(|(q, zi)| q.clone() + Rat::from_int(*zi))
            .collect();
        if let Ok(alpha) = OneForm::new(p, coords) {
            out.push(alpha);
        }
    }
    Ok(out)
}

/// Outcome of an admissibility search over a lift box.
#[derive(Clone, PartialEq, Debug)]
pub struct AdmissibilityReport {
    pub character: Character,
    /// Twisted `dim H^1` at the character.
    pub lhs: usize,
    /// Each lift in the box with its Aomoto `dim H^1`.
    pub lifts: Vec<(OneForm, usize)>,
    /// Whether some listed lift achieves `rhs == lhs`.
    pub admissible: bool,
    /// First achieving lift in enumeration order, if any.
    pub witness: Option<OneForm>,
    /// The presentation's formality flag; the equality is only meaningful as
    /// 1-admissibility under 1-formality.
    pub formal: bool,
}

/// Searches the box for a lift whose Aomoto dimension equals the twisted
/// dimension. The trivial character short-circuits: the zero form is always
/// an achieving lift, no search needed.
pub fn is_admissible(
    p: &Presentation,
    chi: &Character,
    lift_box: LiftBox,
) -> Result<AdmissibilityReport> {
    chi.check(p)?;
    let lhs = twisted_h1_dim(p, chi)?;
    let formal = p.is_formal();
    if chi.is_trivial() {
        let zero = OneForm::new(p, vec![Rat::zero(); p.num_gens()])
            .expect("the zero form pairs to zero with every relator");
        let rhs = cup_data(p).aomoto_h1_dim(&zero);
        return Ok(AdmissibilityReport {
            character: chi.clone(),
            lhs,
            lifts: vec![(zero.clone(), rhs)],
            admissible: rhs == lhs,
            witness: Some(zero),
            formal,
        });
    }
    let data = cup_data(p);
    let mut lifts = Vec::new();
    let mut witness = None;
    for alpha in exp_lift_candidates(p, chi, lift_box)? {
        let rhs = data.aomoto_h1_dim(&alpha);
        if rhs == lhs && witness.is_none() {
            witness = Some(alpha.clone());
        }
        lifts.push((alpha, rhs));
    }
    Ok(AdmissibilityReport {
        character: chi.clone(),
        lhs,
        lifts,
        admissible: witness.is_some(),
        witness,
        formal,
    })
}

/// Two-sided data of the semicontinuity comparison at one lift.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct InequalityAudit {
    /// Twisted `dim H^1` at the character.
    pub lhs: usize,
    /// Aomoto `dim H^1` at the lift.
    pub rhs: usize,
    /// `lhs >= rhs`.
    pub holds: bool,
    /// Set when the presentation is flagged 1-formal yet the inequality
    /// fails — the flag, not the arithmetic, is then in doubt.
    pub formality_violation: bool,
}

/// Compares the twisted dimension at a character with the Aomoto dimension
/// at one of its lifts. The lift must reduce to the character coordinatewise.
pub fn inequality_audit(
    p: &Presentation,
    chi: &Character,
    alpha: &OneForm,
) -> Result<InequalityAudit> {
    chi.check(p)?;
    if alpha.coords().len() != chi.len()
        || alpha
            .coords()
            .iter()
            .zip(chi.coords())
            .any(|(a, q)| a.frac_mod1() != *q)
    {
        return Err(Error::NotALift(format!(
            "fractional parts of ({}) do not spell {chi}",
            alpha
                .coords()
                .iter()
                .map(Rat::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )));
    }
    let alpha = OneForm::new(p, alpha.coords().to_vec())?;
    let lhs = twisted_h1_dim(p, chi)?;
    let rhs = cup_data(p).aomoto_h1_dim(&alpha);
    let holds = lhs >= rhs;
    Ok(InequalityAudit {
        lhs,
        rhs,
        holds,
        formality_violation: p.is_formal() && !holds,
    })
}

/// First lift in the box with Aomoto dimension zero, if any. `None` means
/// none in this box, not nonexistence.
pub fn find_zero_lift(
    p: &Presentation,
    chi: &Character,
    lift_box: LiftBox,
) -> Result<Option<OneForm>> {
    chi.check(p)?;
    let data = cup_data(p);
    for alpha in exp_lift_candidates(p, chi, lift_box)? {
        if data.aomoto_h1_dim(&alpha) == 0 {
            return Ok(Some(alpha));
        }
    }
    Ok(None)
}

/// Comparison of the dimension at a character with the generic dimension
/// along a subtorus through it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GenericDimCriterion {
    pub dim_at: usize,
    pub generic_dim: usize,
    pub matches: bool,
}

/// Checks whether the twisted dimension at the character equals the generic
/// dimension along the given subtorus; the subtorus must pass through the
/// character.
pub fn generic_dim_criterion(
    p: &Presentation,
    chi: &Character,
    w: &TorusSpec,
) -> Result<GenericDimCriterion> {
    w.validate_against(p)?;
    if !w.contains(chi) {
        return Err(Error::NotOnTorus);
    }
    let dim_at = twisted_h1_dim(p, chi)?;
    let generic_dim = generic_h1_dim_along(p, w)?;
    Ok(GenericDimCriterion {
        dim_at,
        generic_dim,
        matches: dim_at == generic_dim,
    })
}
