//! Characteristic-variety queries: twisted cohomology dimensions at torsion
//! characters, generic dimensions along monomial subtori, jumping parameters
//! with torsion certification, curve dimension formulas, and the inverse
//! symmetry check.
//!
//! Chain model: for a presentation with `n` generators and `m` relators the
//! twisted cochain complex is `C -> C^n -> C^m` with first differential the
//! column `(rho(x_i) - 1)` and second the evaluated Alexander matrix, so
//! `dim H^1 = (n - rank d1) - rank J(rho)`. Degree-one cohomology of a group
//! agrees with that of any of its presentation 2-complexes, so this computes
//! the group-level invariant regardless of which presentation is supplied.
//!
//! The jumping pipeline along a one-parameter subtorus: substitute the
//! parametrization into the Alexander matrix, take the monic gcd of all
//! minors at the generic rank, discard the root at 0 (not on the torus), push
//! down to the rationals by multiplying Galois conjugates, split off
//! cyclotomic factors, and confirm every candidate root of unity by exact
//! rank evaluation in the compositum field. Parameters hitting the trivial
//! character are reported separately because the `d1` term, not the Alexander
//! rank, changes there.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{coprime_residues, lcm_u64, Cyclo, Rat, RootOfUnity};
use crate::fox::Presentation;
use crate::laurent::{cyclotomic_part, norm_to_rationals, LaurentPoly, UniPoly};
use crate::linalg::{
    generic_rank, minor_gcd_1d, rank_int, rank_over_field, torus_membership, Matrix,
};

/// A torsion point of the character torus: coordinate `q_i` denotes the root
/// of unity `exp(2 pi i q_i)`. Coordinates are kept reduced to `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    q: Vec<Rat>,
}

impl Character {
    pub fn new(coords: Vec<Rat>) -> Self {
        Character {
            q: coords.into_iter().map(|c| c.frac_mod1()).collect(),
        }
    }

    pub fn trivial(n: usize) -> Self {
        Character {
            q: vec![Rat::zero(); n],
        }
    }

    /// Builds the character and checks it against the presentation: right
    /// arity and every relator mapped to 1.
    pub fn validated(p: &Presentation, coords: Vec<Rat>) -> Result<Self> {
        let chi = Character::new(coords);
        chi.check(p)?;
        Ok(chi)
    }

    pub(crate) fn check(&self, p: &Presentation) -> Result<()> {
        if self.q.len() != p.num_gens() {
            return Err(Error::InvalidCharacter(format!(
                "expected {} coordinates, got {}",
                p.num_gens(),
                self.q.len()
            )));
        }
        if !p.validate_character(&self.roots()) {
            return Err(Error::InvalidCharacter(format!(
                "`{self}` does not kill every relator of {}",
                p.name()
            )));
        }
        Ok(())
    }

    pub fn coords(&self) -> &[Rat] {
        &self.q
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.q.iter().all(Rat::is_zero)
    }

    pub fn roots(&self) -> Vec<RootOfUnity> {
        self.q.iter().map(|c| RootOfUnity::new(c.clone())).collect()
    }

    /// Order as a torsion point: least common multiple of coordinate orders.
    pub fn order(&self) -> u64 {
        self.roots()
            .iter()
            .fold(1, |acc, r| lcm_u64(acc, r.order()))
    }

    /// The inverse character, with coordinates `1 - q_i` mod 1.
    pub fn inverse(&self) -> Character {
        Character::new(self.q.iter().map(|c| -c.clone()).collect())
    }

    /// Parses the comma-separated rational syntax, e.g. `1/2,1/3,0`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut coords = Vec::new();
        for tok in text.split(',') {
            let tok = tok.trim();
            let r: Rat = tok.parse().map_err(|_| {
                Error::InvalidCharacter(format!("bad coordinate `{tok}`"))
            })?;
            coords.push(r);
        }
        Ok(Character::new(coords))
    }

    pub fn emit(&self) -> String {
        self.q
            .iter()
            .map(Rat::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.emit())
    }
}

/// A `d`-parameter monomial subtorus of the character torus, shifted by a
/// torsion translate: coordinate `i` of the point at parameters
/// `(t_1, ..., t_d)` is `translate_i * t_1^{e_i1} ... t_d^{e_id}`.
///
/// Invariants: the exponent matrix is `n x d` of rank `d` (the map is
/// finite-to-one onto its image), and against a presentation every point of
/// the spec must be a valid character (`E . exponents = 0` and the translate
/// valid).
#[derive(Clone, PartialEq, Debug)]
pub struct TorusSpec {
    name: String,
    translate: Character,
    exponents: Vec<Vec<i64>>,
}

impl TorusSpec {
    pub fn new(
        name: impl Into<String>,
        translate: Character,
        exponents: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let n = translate.len();
        if exponents.len() != n {
            return Err(Error::RowCountMismatch {
                expected: n,
                found: exponents.len(),
            });
        }
        let d = exponents.first().map_or(0, Vec::len);
        if d == 0 {
            return Err(Error::SpecMismatch(
                "a subtorus spec needs at least one parameter".into(),
            ));
        }
        if exponents.iter().any(|row| row.len() != d) {
            return Err(Error::SpecMismatch(
                "ragged exponent rows in subtorus spec".into(),
            ));
        }
        let rank = rank_int(&Matrix::from_rows(exponents.clone()));
        if rank < d {
            return Err(Error::RankDeficientSpec { rank, params: d });
        }
        Ok(TorusSpec {
            name: name.into(),
            translate,
            exponents,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of parameters `d`.
    pub fn params(&self) -> usize {
        self.exponents[0].len()
    }

    /// Number of ambient coordinates `n`.
    pub fn num_coords(&self) -> usize {
        self.exponents.len()
    }

    pub fn translate(&self) -> &Character {
        &self.translate
    }

    pub fn exponents(&self) -> &[Vec<i64>] {
        &self.exponents
    }

    /// Checks the spec against a presentation: matching coordinate count and
    /// every parametrized point a valid character.
    pub fn validate_against(&self, p: &Presentation) -> Result<()> {
        let n = p.num_gens();
        if self.num_coords() != n {
            return Err(Error::RowCountMismatch {
                expected: n,
                found: self.num_coords(),
            });
        }
        let e = p.exponent_matrix();
        for j in 0..e.rows() {
            for col in 0..self.params() {
                let mut acc = 0i64;
                for i in 0..n {
                    acc += e.at(j, i) * self.exponents[i][col];
                }
                if acc != 0 {
                    return Err(Error::SpecMismatch(format!(
                        "relator {j} pairs with parameter {col} to exponent {acc}, not 0"
                    )));
                }
            }
        }
        self.translate.check(p).map_err(|_| {
            Error::SpecMismatch("translate is not a valid character".into())
        })
    }

    /// Whether the subtorus passes through the given character.
    pub fn contains(&self, chi: &Character) -> bool {
        if chi.len() != self.num_coords() {
            return false;
        }
        let delta: Vec<Rat> = chi
            .coords()
            .iter()
            .zip(self.translate.coords())
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        torus_membership(&self.exponents, &delta)
    }

    /// The character at rational parameter exponents `theta` (parameter `j`
    /// set to `exp(2 pi i theta_j)`).
    pub fn character_at(&self, theta: &[Rat]) -> Character {
        assert_eq!(theta.len(), self.params(), "one exponent per parameter");
        Character::new(
            self.translate
                .coords()
                .iter()
                .enumerate()
                .map(|(i, q)| {
                    let mut acc = q.clone();
                    for (j, th) in theta.iter().enumerate() {
                        acc = acc + th.scale_int(self.exponents[i][j]);
                    }
                    acc
                })
                .collect(),
        )
    }

    /// The Alexander matrix with the parametrization substituted in: entries
    /// become Laurent polynomials in the parameters over a cyclotomic field.
    pub fn substituted(&self, p: &Presentation) -> Result<Matrix<LaurentPoly<Cyclo>>> {
        self.validate_against(p)?;
        let jm = p.alexander_matrix();
        let roots = self.translate.roots();
        let mut rows = Vec::with_capacity(jm.rows());
        for j in 0..jm.rows() {
            let mut row = Vec::with_capacity(jm.cols());
            for i in 0..jm.cols() {
                row.push(jm.at(j, i).substitute_monomial(&self.exponents, &roots)?);
            }
            rows.push(row);
        }
        Ok(Matrix::from_fn(jm.rows(), jm.cols(), |j, i| {
            rows[j][i].clone()
        }))
    }

    /// Reparametrizes by a monomial substitution of the parameters
    /// themselves: old parameter `j` becomes
    /// `exp(2 pi i sub_translate_j) * u_1^{s_j1} ... u_e^{s_je}`.
    pub fn compose(
        &self,
        name: impl Into<String>,
        sub_translate: &[Rat],
        sub_exponents: &[Vec<i64>],
    ) -> Result<TorusSpec> {
        let d = self.params();
        if sub_translate.len() != d || sub_exponents.len() != d {
            return Err(Error::RowCountMismatch {
                expected: d,
                found: sub_translate.len().max(sub_exponents.len()),
            });
        }
        let translate = Character::new(
            self.translate
                .coords()
                .iter()
                .enumerate()
                .map(|(i, q)| {
                    let mut acc = q.clone();
                    for (j, tq) in sub_translate.iter().enumerate() {
                        acc = acc + tq.scale_int(self.exponents[i][j]);
                    }
                    acc
                })
                .collect(),
        );
        let e_new = sub_exponents.first().map_or(0, Vec::len);
        let exponents: Vec<Vec<i64>> = (0..self.num_coords())
            .map(|i| {
                (0..e_new)
                    .map(|k| {
                        (0..d)
                            .map(|j| self.exponents[i][j] * sub_exponents[j][k])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        TorusSpec::new(name, translate, exponents)
    }

    /// Parses the line-oriented format:
    ///
    /// ```text
    /// torus <name>
    /// params <d>
    /// translate <q1> ... <qn>
    /// row <e1> ... <ed>        # exactly n rows
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut name: Option<String> = None;
        let mut params: Option<usize> = None;
        let mut translate: Option<Vec<Rat>> = None;
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw_line.split_once('#') {
                Some((before, _)) => before,
                None => raw_line,
            };
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let (keyword, rest) = match trimmed.split_once(char::is_whitespace) {
                Some((k, r)) => (k, r.trim()),
                None => (trimmed, ""),
            };
            let parse_err = |msg: String| Error::Parse {
                line: line_no,
                col: 1,
                msg,
            };
            match keyword {
                "torus" => {
                    if name.is_some() {
                        return Err(parse_err("duplicate `torus` line".into()));
                    }
                    name = Some(rest.to_string());
                }
                "params" => {
                    let d: usize = rest
                        .parse()
                        .map_err(|_| parse_err(format!("bad parameter count `{rest}`")))?;
                    if d == 0 {
                        return Err(parse_err("parameter count must be positive".into()));
                    }
                    params = Some(d);
                }
                "translate" => {
                    let mut coords = Vec::new();
                    for tok in rest.split_whitespace() {
                        let r: Rat = tok
                            .parse()
                            .map_err(|_| parse_err(format!("bad coordinate `{tok}`")))?;
                        coords.push(r);
                    }
                    translate = Some(coords);
                }
                "row" => {
                    let mut row = Vec::new();
                    for tok in rest.split_whitespace() {
                        let v: i64 = tok
                            .parse()
                            .map_err(|_| parse_err(format!("bad exponent `{tok}`")))?;
                        row.push(v);
                    }
                    let d = params
                        .ok_or_else(|| parse_err("`row` before `params`".into()))?;
                    if row.len() != d {
                        return Err(Error::RowCountMismatch {
                            expected: d,
                            found: row.len(),
                        });
                    }
                    rows.push(row);
                }
                other => {
                    return Err(parse_err(format!("unknown keyword `{other}`")));
                }
            }
        }
        let name = name.ok_or(Error::Parse {
            line: 1,
            col: 1,
            msg: "missing `torus` line".into(),
        })?;
        let translate = translate.ok_or(Error::Parse {
            line: 1,
            col: 1,
            msg: "missing `translate` line".into(),
        })?;
        if rows.len() != translate.len() {
            return Err(Error::RowCountMismatch {
                expected: translate.len(),
                found: rows.len(),
            });
        }
        TorusSpec::new(name, Character::new(translate), rows)
    }

    /// Canonical text form; `parse(emit(w)) == w`.
    pub fn emit(&self) -> String {
        let mut out = format!("torus {}\nparams {}\n", self.name, self.params());
        out.push_str("translate ");
        out.push_str(
            &self
                .translate
                .coords()
                .iter()
                .map(Rat::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push('\n');
        for row in &self.exponents {
            out.push_str("row ");
            out.push_str(
                &row.iter()
                    .map(i64::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push('\n');
        }
        out
    }
}

// ---- Twisted dimensions at torsion characters ----

/// `H^0` with coefficients twisted by `rho`: 1 for the trivial character
/// (invariants exist), else 0.
pub fn twisted_h0_dim(p: &Presentation, chi: &Character) -> Result<usize> {
    chi.check(p)?;
    Ok(if chi.is_trivial() { 1 } else { 0 })
}

fn evaluated_alexander(p: &Presentation, chi: &Character) -> Matrix<Cyclo> {
    let roots = chi.roots();
    p.alexander_matrix()
        .map(|entry| entry.evaluate_at_character(&roots))
}

/// `dim H^1` with coefficients twisted by `rho`, via the chain model
/// `(n - rank d1) - rank J(rho)` described in the module docs.
pub fn twisted_h1_dim(p: &Presentation, chi: &Character) -> Result<usize> {
    chi.check(p)?;
    let d1_rank = usize::from(!chi.is_trivial());
    let j_rank = rank_over_field(&evaluated_alexander(p, chi));
    Ok(p.num_gens() - d1_rank - j_rank)
}

/// Membership in the depth-`k` jumping stratum: `dim H^1 >= k`.
pub fn charvar_membership(p: &Presentation, chi: &Character, k: usize) -> Result<bool> {
    Ok(twisted_h1_dim(p, chi)? >= k)
}

/// `dim H^1` at a generic point of the subtorus: `(n - 1) - generic rank` of
/// the substituted Alexander matrix over the rational function field in the
/// parameters. The generic point is never the trivial character (the spec has
/// at least one non-constant coordinate), so `rank d1 = 1` there.
pub fn generic_h1_dim_along(p: &Presentation, w: &TorusSpec) -> Result<usize> {
    let sub = w.substituted(p)?;
    Ok(p.num_gens() - 1 - generic_rank(&sub))
}

/// A certified parameter value where the Alexander rank drops.
#[derive(Clone, PartialEq, Debug)]
pub struct JumpPoint {
    /// Parameter value, a root of unity.
    pub param: RootOfUnity,
    /// Its multiplicative order.
    pub order: u64,
    /// Twisted `dim H^1` at the corresponding character.
    pub h1_dim: usize,
}

/// Jumping data along a one-parameter subtorus.
#[derive(Clone, PartialEq, Debug)]
pub struct JumpReport {
    pub torus: String,
    /// Rank of the substituted Alexander matrix at a generic parameter.
    pub generic_rank: usize,
    /// `dim H^1` at a generic parameter.
    pub generic_h1_dim: usize,
    /// Parameters where the Alexander rank drops, all certified torsion.
    pub torsion_points: Vec<JumpPoint>,
    /// Monic rational factor of the minor gcd with no cyclotomic roots;
    /// `None` when every root-on-the-torus is a root of unity.
    pub non_torsion_factor: Option<UniPoly<Rat>>,
    /// Parameters mapping to the trivial character, where the `d1` term
    /// (not the Alexander rank) changes.
    pub trivial_char_params: Vec<RootOfUnity>,
}

/// Matrix-level jumping data, for feeding synthetic matrices through the
/// same certification pipeline.
#[derive(Clone, PartialEq, Debug)]
pub struct MatrixJumpReport {
    pub generic_rank: usize,
    /// Certified (parameter, order) pairs where rank drops below the request.
    pub points: Vec<(RootOfUnity, u64)>,
    pub non_torsion_factor: Option<UniPoly<Rat>>,
}

fn eval_at_root(p: &LaurentPoly<Cyclo>, z: &RootOfUnity) -> Cyclo {
    let mut acc = Cyclo::zero_at(1);
    for (exps, coeff) in p.terms() {
        acc = acc + coeff.clone() * z.pow(exps[0]).as_cyclo();
    }
    acc
}

/// Rank of a univariate Laurent matrix evaluated at a root of unity, working
/// in the compositum of the coefficient field and the field of the root.
pub fn rank_at_root(m: &Matrix<LaurentPoly<Cyclo>>, z: &RootOfUnity) -> usize {
    rank_over_field(&m.map(|entry| eval_at_root(entry, z)))
}

/// Locates all parameter values on the torus where the rank of a univariate
/// Laurent matrix drops below `r`, certifying each as a root of unity with
/// its order, and reporting any leftover factor without roots of unity.
///
/// Completeness: a rank-drop point is a common root of all `r x r` minors,
/// hence a root of their gcd, hence of the rational norm of the gcd; the
/// cyclotomic split is exhaustive for roots of unity. Soundness: every
/// candidate is confirmed by exact rank evaluation.
pub fn rank_jump_points(m: &Matrix<LaurentPoly<Cyclo>>, r: usize) -> Result<MatrixJumpReport> {
    let grank = generic_rank(m);
    let gcd = minor_gcd_1d(m, r)?;
    let gcd = gcd.shift_down(gcd.valuation().expect("minor gcd is nonzero"));
    let norm = norm_to_rationals(&gcd);
    let (factors, remainder) = cyclotomic_part(&norm)?;
    let mut points = Vec::new();
    for (level, _multiplicity) in &factors {
        for a in coprime_residues(*level) {
            let z = RootOfUnity::from_frac(a as i64, *level as i64);
            if rank_at_root(m, &z) < r {
                points.push((z, *level));
            }
        }
    }
    points.sort_by_key(|(z, order)| (*order, z.numerator_mod_order()));
    let non_torsion_factor = if remainder.degree().unwrap_or(0) >= 1 {
        Some(remainder)
    } else {
        None
    };
    Ok(MatrixJumpReport {
        generic_rank: grank,
        points,
        non_torsion_factor,
    })
}

/// Parameter values of a one-parameter spec whose character is trivial.
fn trivial_parameter_values(w: &TorusSpec) -> Vec<RootOfUnity> {
    assert_eq!(1, w.params());
    let column: Vec<i64> = w.exponents().iter().map(|row| row[0]).collect();
    let i0 = column
        .iter()
        .position(|&e| e != 0)
        .expect("rank-1 exponent column has a nonzero entry");
    let e0 = column[i0];
    let q0 = w.translate().coords()[i0].clone();
    let mut out = Vec::new();
    for j in 0..e0.unsigned_abs() {
        // Solve q0 + e0 * theta = j in Q/Z.
        let theta =
            (Rat::from_int(j as i64) - q0.clone()) * Rat::new(1, e0);
        let ok = w
            .translate()
            .coords()
            .iter()
            .zip(&column)
            .all(|(q, e)| (q.clone() + theta.scale_int(*e)).is_integer());
        if ok {
            out.push(RootOfUnity::new(theta));
        }
    }
    out.sort_by_key(|z| (z.order(), z.numerator_mod_order()));
    out
}

/// Full jumping report along a one-parameter subtorus: rank-drop parameters
/// with certified orders and exact twisted dimensions, plus the parameters
/// hitting the trivial character.
pub fn jumping_points_1d(p: &Presentation, w: &TorusSpec) -> Result<JumpReport> {
    if w.params() != 1 {
        return Err(Error::SpecMismatch(format!(
            "jumping-point search needs a one-parameter spec, got {} parameters",
            w.params()
        )));
    }
    let sub = w.substituted(p)?;
    let r = generic_rank(&sub);
    let matrix_report = rank_jump_points(&sub, r)?;
    let mut torsion_points = Vec::with_capacity(matrix_report.points.len());
    for (z, order) in matrix_report.points {
        let chi = w.character_at(&[z.exponent().clone()]);
        let h1_dim = twisted_h1_dim(p, &chi)?;
        torsion_points.push(JumpPoint {
            param: z,
            order,
            h1_dim,
        });
    }
    Ok(JumpReport {
        torus: w.name().to_string(),
        generic_rank: r,
        generic_h1_dim: p.num_gens() - 1 - r,
        torsion_points,
        non_torsion_factor: matrix_report.non_torsion_factor,
        trivial_char_params: trivial_parameter_values(w),
    })
}

// ---- Curve formulas ----

/// A smooth complex curve: genus plus number of punctures; proper means no
/// punctures.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CurveDescriptor {
    pub genus: u64,
    pub punctures: u64,
}

impl CurveDescriptor {
    pub fn new(genus: u64, punctures: u64) -> Self {
        CurveDescriptor { genus, punctures }
    }

    pub fn is_proper(&self) -> bool {
        self.punctures == 0
    }

    pub fn euler_char(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.punctures as i64
    }

    pub fn b1(&self) -> u64 {
        if self.is_proper() {
            2 * self.genus
        } else {
            2 * self.genus + self.punctures - 1
        }
    }
}

/// Dimension data of the subtorus associated with a curve: `(dim W,
/// generic dim) = (-chi + e, -chi)` with `e = 1` affine, `e = 2` proper.
/// Curves with `dim W <= 0` (the sphere and the affine line) support no
/// positive-dimensional component and are rejected.
pub fn component_dims(s: &CurveDescriptor) -> Result<(u64, u64)> {
    let e: i64 = if s.is_proper() { 2 } else { 1 };
    let neg_chi = -s.euler_char();
    let dim_w = neg_chi + e;
    if dim_w <= 0 {
        return Err(Error::DegenerateCurve(dim_w));
    }
    Ok((dim_w as u64, neg_chi as u64))
}

/// `dim H^1` of the curve with a rank-one local system: `b1` for the trivial
/// system, `-chi` otherwise. Returned as a signed integer because the formula
/// value is negative for simply connected curves (where no nontrivial system
/// exists to ask about).
pub fn curve_h1_dim(s: &CurveDescriptor, trivial: bool) -> i64 {
    if trivial {
        s.b1() as i64
    } else {
        -s.euler_char()
    }
}

// ---- Symmetry under inversion ----

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetryReport {
    pub dim_at: usize,
    pub dim_at_inverse: usize,
    pub equal: bool,
}

/// Compares `dim H^1` at a character and at its inverse; they agree because
/// Galois conjugation carries one evaluated Alexander matrix to the other.
pub fn symmetry_check(p: &Presentation, chi: &Character) -> Result<SymmetryReport> {
    let dim_at = twisted_h1_dim(p, chi)?;
    let dim_at_inverse = twisted_h1_dim(p, &chi.inverse())?;
    Ok(SymmetryReport {
        dim_at,
        dim_at_inverse,
        equal: dim_at == dim_at_inverse,
    })
}
