//! Words in free groups, finite group presentations, Fox derivatives, and
//! abelianized Alexander matrices.
//!
//! Invariants:
//! - `Word` is always freely reduced: syllables carry nonzero exponents and
//!   adjacent syllables use distinct generators. Input is reduced on
//!   construction, so equality is literal equality of syllable lists.
//! - The abelianized Fox derivative is invariant under free reduction, so
//!   reducing first never changes any derivative (covered by a test against
//!   the unreduced evaluation).
//! - Alexander matrix entries satisfy the fundamental identity
//!   `sum_i J[j][i] * (x_i - 1) = ab(r_j) - 1` exactly.
//!
//! Presentation text format (line oriented, `#` comments):
//!
//! ```text
//! group <name>
//! gens <id> <id> ...
//! rel <word>              # zero or more
//! formal true             # optional, defaults to false
//! quasiprojective true    # optional, defaults to false
//! ```
//!
//! A word is a space-separated list of tokens `id` or `id^<exponent>`, or the
//! single token `1` for the empty word.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{Rat, RootOfUnity};
use crate::laurent::LaurentPoly;
use crate::linalg::{rank_int, Matrix};

/// Freely reduced word in a free group; syllables are
/// (generator index, nonzero exponent) with distinct adjacent generators.
#[derive(Clone, PartialEq, Eq)]
pub struct Word {
    syllables: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word {
            syllables: Vec::new(),
        }
    }

    /// Single generator to a power; exponent 0 gives the identity.
    pub fn syllable(gen: usize, exp: i64) -> Self {
        Self::from_syllables(vec![(gen, exp)])
    }

    /// Builds a word from an arbitrary spelling, freely reducing it.
    pub fn from_syllables(raw: Vec<(usize, i64)>) -> Self {
        let mut reduced: Vec<(usize, i64)> = Vec::with_capacity(raw.len());
        for (g, e) in raw {
            if e == 0 {
                continue;
            }
            match reduced.last_mut() {
                Some((lg, le)) if *lg == g => {
                    *le += e;
                    if *le == 0 {
                        reduced.pop();
                    }
                }
                _ => reduced.push((g, e)),
            }
        }
        // A pop can expose a new mergeable pair; repeat until stable.
        loop {
            let mut changed = false;
            let mut next: Vec<(usize, i64)> = Vec::with_capacity(reduced.len());
            for (g, e) in reduced {
                match next.last_mut() {
                    Some((lg, le)) if *lg == g => {
                        *le += e;
                        changed = true;
                        if *le == 0 {
                            next.pop();
                        }
                    }
                    _ => next.push((g, e)),
                }
            }
            reduced = next;
            if !changed {
                break;
            }
        }
        Word { syllables: reduced }
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Word length counted in letters.
    pub fn letter_len(&self) -> u64 {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    /// Largest generator index used, if any.
    pub fn max_gen(&self) -> Option<usize> {
        self.syllables.iter().map(|(g, _)| *g).max()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut raw = self.syllables.clone();
        raw.extend_from_slice(&other.syllables);
        Word::from_syllables(raw)
    }

    pub fn inverse(&self) -> Word {
        Word {
            syllables: self.syllables.iter().rev().map(|(g, e)| (*g, -e)).collect(),
        }
    }

    /// Exponent-sum vector of the abelianized word.
    pub fn abelianized(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n];
        for (g, e) in &self.syllables {
            assert!(*g < n, "generator index {g} out of range for {n} generators");
            v[*g] += e;
        }
        v
    }

    /// The abelianization as a Laurent monomial.
    pub fn as_monomial<S: AsRef<str>>(&self, vars: &[S]) -> LaurentPoly<Rat> {
        LaurentPoly::monomial(vars, self.abelianized(vars.len()), Rat::one())
    }

    /// Parses a space-separated word over the given generator names; `1`
    /// denotes the empty word. `line` is used for error reporting.
    pub fn parse<S: AsRef<str>>(text: &str, gens: &[S], line: usize) -> Result<Word> {
        Self::parse_at(text, gens, line, 0)
    }

    /// Like `parse`, but reported columns are shifted by `col_offset` so a
    /// caller handing over a slice of a longer line keeps positions accurate.
    pub fn parse_at<S: AsRef<str>>(
        text: &str,
        gens: &[S],
        line: usize,
        col_offset: usize,
    ) -> Result<Word> {
        let trimmed = text.trim();
        if trimmed == "1" {
            return Ok(Word::identity());
        }
        let mut raw = Vec::new();
        for (col, token) in tokens_with_columns_at(text, col_offset) {
            if token == "1" {
                return Err(Error::Parse {
                    line,
                    col,
                    msg: "the empty-word token `1` must stand alone".into(),
                });
            }
            let (name, exp) = match token.split_once('^') {
                None => (token, 1i64),
                Some((name, e)) => {
                    let exp = e.parse::<i64>().map_err(|_| Error::Parse {
                        line,
                        col,
                        msg: format!("bad exponent `{e}`"),
                    })?;
                    (name, exp)
                }
            };
            if !is_identifier(name) {
                return Err(Error::Parse {
                    line,
                    col,
                    msg: format!("bad generator token `{name}`"),
                });
            }
            let Some(idx) = gens.iter().position(|g| g.as_ref() == name) else {
                return Err(Error::UnknownGenerator {
                    name: name.to_string(),
                    line,
                });
            };
            raw.push((idx, exp));
        }
        if raw.is_empty() {
            return Err(Error::Parse {
                line,
                col: col_offset + 1,
                msg: "empty word (use `1` for the identity)".into(),
            });
        }
        Ok(Word::from_syllables(raw))
    }

    /// Renders the word over generator names; inverse of `parse`.
    pub fn emit<S: AsRef<str>>(&self, gens: &[S]) -> String {
        if self.is_identity() {
            return "1".to_string();
        }
        self.syllables
            .iter()
            .map(|(g, e)| {
                let name = gens[*g].as_ref();
                if *e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.syllables)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits on whitespace, reporting 1-based start columns shifted by `offset`.
fn tokens_with_columns_at(text: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((offset + s + 1, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((offset + s + 1, &text[s..]));
    }
    out
}

/// Abelianized Fox derivative of a possibly unreduced spelling. The public
/// entry point works on reduced words; this form exists so tests can confirm
/// that free reduction never changes the result.
fn fox_derivative_raw<S: AsRef<str>>(
    spelling: &[(usize, i64)],
    i: usize,
    vars: &[S],
) -> LaurentPoly<Rat> {
    let n = vars.len();
    let mut result = LaurentPoly::zero(vars);
    let mut prefix = vec![0i64; n];
    for (g, e) in spelling {
        assert!(*g < n, "generator index {g} out of range for {n} generators");
        if *g == i {
            if *e > 0 {
                // d(x^e) = 1 + x + ... + x^(e-1), shifted by the prefix.
                for j in 0..*e {
                    let mut exps = prefix.clone();
                    exps[i] += j;
                    result.insert_add(exps, Rat::one());
                }
            } else {
                // d(x^e) = -(x^-1 + ... + x^e) for e < 0.
                for j in 1..=(-*e) {
                    let mut exps = prefix.clone();
                    exps[i] -= j;
                    result.insert_add(exps, -Rat::one());
                }
            }
        }
        prefix[*g] += e;
    }
    result
}

/// Abelianized Fox derivative of `w` with respect to generator `i`, as a
/// Laurent polynomial in one variable per generator.
///
/// Defining rules: `d(x_i)/d(x_i) = 1`, `d(x_j)/d(x_i) = 0` for `j != i`,
/// `d(x_i^-1)/d(x_i) = -x_i^-1`, and `d(uv) = du + ab(u) * dv`.
pub fn fox_derivative<S: AsRef<str>>(w: &Word, i: usize, vars: &[S]) -> Result<LaurentPoly<Rat>> {
    if i >= vars.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            count: vars.len(),
        });
    }
    Ok(fox_derivative_raw(w.syllables(), i, vars))
}

/// Finite presentation of a group, standing in for a space with this
/// fundamental group. The two flags record user assertions about the space
/// (1-formality, quasi-projectivity); nothing verifies them.
#[derive(Clone, PartialEq, Debug)]
pub struct Presentation {
    name: String,
    generators: Vec<String>,
    relators: Vec<Word>,
    formal: bool,
    quasi_projective: bool,
}

impl Presentation {
    pub fn new(
        name: impl Into<String>,
        generators: Vec<String>,
        relators: Vec<Word>,
        formal: bool,
        quasi_projective: bool,
    ) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGeneratorList);
        }
        for (i, g) in generators.iter().enumerate() {
            assert!(is_identifier(g), "bad generator name `{g}`");
            assert!(
                !generators[..i].contains(g),
                "duplicate generator name `{g}`"
            );
        }
        let n = generators.len();
        for r in &relators {
            if let Some(max) = r.max_gen() {
                if max >= n {
                    return Err(Error::IndexOutOfRange {
                        index: max,
                        count: n,
                    });
                }
            }
        }
        Ok(Presentation {
            name: name.into(),
            generators,
            relators,
            formal,
            quasi_projective,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn num_gens(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn is_formal(&self) -> bool {
        self.formal
    }

    pub fn is_quasi_projective(&self) -> bool {
        self.quasi_projective
    }

    /// Parses the line-oriented presentation format described in the module
    /// docs. Lines must appear in the order group, gens, then any mix of
    /// rel / formal / quasiprojective lines.
    pub fn parse(text: &str) -> Result<Self> {
        let mut name: Option<String> = None;
        let mut generators: Option<Vec<String>> = None;
        let mut relators = Vec::new();
        let mut formal = false;
        let mut quasi_projective = false;
        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw_line.split_once('#') {
                Some((before, _)) => before,
                None => raw_line,
            };
            if line.trim().is_empty() {
                continue;
            }
            // Split off the leading keyword, tracking byte offsets in `line`
            // so error columns refer to the original file line.
            let indent = line.len() - line.trim_start().len();
            let after = &line[indent..];
            let (keyword, rest, rest_offset) = match after.find(char::is_whitespace) {
                Some(i) => (&after[..i], &after[i..], indent + i),
                None => (after.trim_end(), "", line.len()),
            };
            let keyword_col = indent + 1;
            match keyword {
                "group" => {
                    if name.is_some() {
                        return Err(Error::Parse {
                            line: line_no,
                            col: keyword_col,
                            msg: "duplicate `group` line".into(),
                        });
                    }
                    let n = rest.trim();
                    if !is_identifier(n) {
                        return Err(Error::Parse {
                            line: line_no,
                            col: keyword_col,
                            msg: format!("bad group name `{n}`"),
                        });
                    }
                    name = Some(n.to_string());
                }
                "gens" => {
                    if name.is_none() {
                        return Err(Error::Parse {
                            line: line_no,
                            col: keyword_col,
                            msg: "`gens` before `group`".into(),
                        });
                    }
                    if generators.is_some() {
                        return Err(Error::Parse {
                            line: line_no,
                            col: keyword_col,
                            msg: "duplicate `gens` line".into(),
                        });
                    }
                    let mut gens = Vec::new();
                    for (col, token) in tokens_with_columns_at(rest, rest_offset) {
                        if !is_identifier(token) {
                            return Err(Error::Parse {
                                line: line_no,
                                col,
                                msg: format!("bad generator name `{token}`"),
                            });
                        }
                        if gens.iter().any(|g: &String| g == token) {
                            return Err(Error::Parse {
                                line: line_no,
                                col,
                                msg: format!("duplicate generator `{token}`"),
                            });
                        }
                        gens.push(token.to_string());
                    }
                    if gens.is_empty() {
                        return Err(Error::EmptyGeneratorList);
                    }
                    generators = Some(gens);
                }
                "rel" => {
                    let Some(gens) = generators.as_ref() else {
                        return Err(Error::Parse {
                            line: line_no,
                            col: keyword_col,
                            msg: "`rel` before `gens`".into(),
                        });
                    };
                    relators.push(Word::parse_at(rest, gens, line_no, rest_offset)?);
                }
                "formal" | "quasiprojective" => {
                    let value = match rest.trim() {
                        "true" => true,
                        "false" => false,
                        other => {
                            return Err(Error::Parse {
                                line: line_no,
                                col: keyword_col,
                                msg: format!("expected true or false, got `{other}`"),
                            })
                        }
                    };
                    if keyword == "formal" {
                        formal = value;
                    } else {
                        quasi_projective = value;
                    }
                }
                other => {
                    return Err(Error::Parse {
                        line: line_no,
                        col: keyword_col,
                        msg: format!("unknown keyword `{other}`"),
                    });
                }
            }
        }
        let Some(name) = name else {
            return Err(Error::Parse {
                line: 1,
                col: 1,
                msg: "missing `group` line".into(),
            });
        };
        let Some(generators) = generators else {
            return Err(Error::EmptyGeneratorList);
        };
        Presentation::new(name, generators, relators, formal, quasi_projective)
    }

    /// Canonical text form; `parse(emit(p)) == p`.
    pub fn emit(&self) -> String {
        let mut out = format!("group {}\ngens {}\n", self.name, self.generators.join(" "));
        for r in &self.relators {
            out.push_str(&format!("rel {}\n", r.emit(&self.generators)));
        }
        if self.formal {
            out.push_str("formal true\n");
        }
        if self.quasi_projective {
            out.push_str("quasiprojective true\n");
        }
        out
    }

    /// The matrix of abelianized Fox derivatives, one row per relator and one
    /// Laurent variable per generator.
    pub fn alexander_matrix(&self) -> Matrix<LaurentPoly<Rat>> {
        let vars = &self.generators;
        Matrix::from_fn(self.relators.len(), self.num_gens(), |j, i| {
            fox_derivative_raw(self.relators[j].syllables(), i, vars)
        })
    }

    /// Integer matrix of exponent sums; equals the Alexander matrix evaluated
    /// at the trivial character.
    pub fn exponent_matrix(&self) -> Matrix<i64> {
        let n = self.num_gens();
        // from_fn keeps the column count explicit even with zero relators.
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|r| r.abelianized(n)).collect();
        Matrix::from_fn(self.relators.len(), n, |j, i| rows[j][i])
    }

    /// First Betti number `n - rank E`.
    pub fn b1(&self) -> usize {
        self.num_gens() - rank_int(&self.exponent_matrix())
    }

    /// A coordinate vector of roots of unity defines a character of the group
    /// exactly when every relator maps to 1, i.e. `E q` is integral.
    pub fn validate_character(&self, rho: &[RootOfUnity]) -> bool {
        if rho.len() != self.num_gens() {
            return false;
        }
        let e = self.exponent_matrix();
        (0..e.rows()).all(|j| {
            let mut acc = Rat::zero();
            for (i, r) in rho.iter().enumerate() {
                acc = acc + r.exponent().scale_int(*e.at(j, i));
            }
            acc.is_integer()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Cyclo;
    use crate::linalg::rank_over_field;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn gens2() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    fn poly2(text: &str) -> LaurentPoly<Rat> {
        LaurentPoly::parse(&["x", "y"], text).unwrap()
    }

    fn word(text: &str, gens: &[String]) -> Word {
        Word::parse(text, gens, 1).unwrap()
    }

    #[test]
    fn defining_rules_of_the_derivative() {
        let gens = gens2();
        let xy = word("x y", &gens);
        assert_eq!(poly2("1"), fox_derivative(&xy, 0, &gens).unwrap());
        assert_eq!(poly2("x"), fox_derivative(&xy, 1, &gens).unwrap());
        let xinv = word("x^-1", &gens);
        assert_eq!(poly2("-x^-1"), fox_derivative(&xinv, 0, &gens).unwrap());
        assert_eq!(
            Err(Error::IndexOutOfRange { index: 2, count: 2 }),
            fox_derivative(&xy, 2, &gens)
        );
    }

    #[test]
    fn words_reduce_freely_on_construction() {
        let w = Word::from_syllables(vec![(0, 1), (1, 1), (1, -1), (0, 2)]);
        assert_eq!(Word::syllable(0, 3), w);
        // A cancellation exposing a new mergeable pair.
        let w = Word::from_syllables(vec![(0, 1), (1, 2), (1, -2), (0, -1)]);
        assert!(w.is_identity());
        assert_eq!(0, w.letter_len());
    }

    #[test]
    fn inverse_and_concat_satisfy_group_laws() {
        let gens = gens2();
        let w = word("x y^-2 x^3", &gens);
        assert!(w.concat(&w.inverse()).is_identity());
        assert_eq!(w, w.inverse().inverse());
    }

    #[test]
    fn reduction_never_changes_the_derivative() {
        let mut rng = StdRng::seed_from_u64(0xf0c5);
        let gens: Vec<String> = vec!["a".into(), "b".into(), "c".into()];
        for _ in 0..100 {
            // Random spelling with zero exponents, repeats, and cancelling
            // pairs deliberately left in.
            let mut raw = Vec::new();
            for _ in 0..rng.gen_range(0..12) {
                let g = rng.gen_range(0..3);
                let e = rng.gen_range(-2..=2i64);
                raw.push((g, e));
                if rng.gen_bool(0.3) {
                    raw.push((g, -e));
                    raw.push((g, e));
                }
            }
            let reduced = Word::from_syllables(raw.clone());
            for i in 0..3 {
                assert_eq!(
                    fox_derivative_raw(&raw, i, &gens),
                    fox_derivative(&reduced, i, &gens).unwrap(),
                    "spelling {raw:?}"
                );
            }
        }
    }

    #[test]
    fn alexander_matrix_of_commutator_and_free_group() {
        let p = Presentation::parse("group t2\ngens x y\nrel x y x^-1 y^-1").unwrap();
        let j = p.alexander_matrix();
        assert_eq!((1, 2), (j.rows(), j.cols()));
        assert_eq!(poly2("1 - y"), *j.at(0, 0));
        assert_eq!(poly2("x - 1"), *j.at(0, 1));

        let free = Presentation::parse("group f2\ngens x y").unwrap();
        let j = free.alexander_matrix();
        assert_eq!((0, 2), (j.rows(), j.cols()));
        assert_eq!(2, free.b1());
    }

    #[test]
    fn alexander_matrix_of_genus_two_relator() {
        let p = Presentation::parse(
            "group genus2\ngens a b c d\nrel a b a^-1 b^-1 c d c^-1 d^-1",
        )
        .unwrap();
        let j = p.alexander_matrix();
        let vars = ["a", "b", "c", "d"];
        let e = |t| LaurentPoly::<Rat>::parse(&vars, t).unwrap();
        assert_eq!(e("1 - b"), *j.at(0, 0));
        assert_eq!(e("a - 1"), *j.at(0, 1));
        assert_eq!(e("1 - d"), *j.at(0, 2));
        assert_eq!(e("c - 1"), *j.at(0, 3));
        // Evaluating at the trivial character must give the zero row.
        let ex = p.exponent_matrix();
        assert!((0..4).all(|i| *ex.at(0, i) == 0));
        assert_eq!(4, p.b1());
    }

    #[test]
    fn exponent_matrices_and_first_betti_numbers() {
        let p = Presentation::parse("group t2\ngens x y\nrel x y x^-1 y^-1").unwrap();
        assert_eq!(vec![0, 0], p.exponent_matrix().row(0).to_vec());
        assert_eq!(2, p.b1());

        let p = Presentation::parse("group c2\ngens x\nrel x^2").unwrap();
        assert_eq!(vec![2], p.exponent_matrix().row(0).to_vec());
        assert_eq!(0, p.b1());

        let p = Presentation::parse("group k\ngens x y\nrel x^2 y^-2").unwrap();
        assert_eq!(vec![2, -2], p.exponent_matrix().row(0).to_vec());
        assert_eq!(1, p.b1());
    }

    fn random_word(rng: &mut StdRng, n: usize, max_letters: usize) -> Word {
        let letters = rng.gen_range(0..=max_letters);
        let raw: Vec<(usize, i64)> = (0..letters)
            .map(|_| (rng.gen_range(0..n), if rng.gen_bool(0.5) { 1 } else { -1 }))
            .collect();
        Word::from_syllables(raw)
    }

    #[test]
    fn fundamental_identity_on_random_words() {
        // sum_i (dw/dx_i) * (x_i - 1) = ab(w) - 1 exactly.
        let mut rng = StdRng::seed_from_u64(0xf0e1);
        for _ in 0..100 {
            let n = rng.gen_range(1..=4usize);
            let vars: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
            let w = random_word(&mut rng, n, 30);
            let mut lhs = LaurentPoly::<Rat>::zero(&vars);
            for i in 0..n {
                let factor = LaurentPoly::gen(&vars, i).sub(&LaurentPoly::one(&vars));
                lhs = lhs.add(&fox_derivative(&w, i, &vars).unwrap().mul(&factor));
            }
            let rhs = w.as_monomial(&vars).sub(&LaurentPoly::one(&vars));
            assert_eq!(rhs, lhs, "word {w:?}");
        }
    }

    #[test]
    fn redundant_relator_keeps_evaluated_rank() {
        let mut rng = StdRng::seed_from_u64(0x5e1f);
        let text = "group g\ngens x y z\nrel x y x^-1 y^-1\nrel y z y^-1 z^-2";
        let p = Presentation::parse(text).unwrap();
        let doubled = Presentation::parse(&format!("{text}\nrel y z y^-1 z^-2")).unwrap();
        for _ in 0..20 {
            let rho: Vec<RootOfUnity> = (0..3)
                .map(|_| RootOfUnity::from_frac(rng.gen_range(0..12), 12))
                .collect();
            if !p.validate_character(&rho) {
                continue;
            }
            let eval = |pres: &Presentation| {
                let m: Matrix<Cyclo> = pres
                    .alexander_matrix()
                    .map(|entry| entry.evaluate_at_character(&rho));
                rank_over_field(&m)
            };
            assert_eq!(eval(&p), eval(&doubled), "character {rho:?}");
        }
    }

    #[test]
    fn character_validity_examples() {
        let t2 = Presentation::parse("group t2\ngens x y\nrel x y x^-1 y^-1").unwrap();
        let rho = [RootOfUnity::from_frac(1, 2), RootOfUnity::from_frac(1, 3)];
        assert!(t2.validate_character(&rho));

        let c2 = Presentation::parse("group c2\ngens x\nrel x^2").unwrap();
        assert!(!c2.validate_character(&[RootOfUnity::from_frac(1, 3)]));
        assert!(c2.validate_character(&[RootOfUnity::from_frac(1, 2)]));
        assert!(!c2.validate_character(&rho), "wrong arity rejected");
    }

    #[test]
    fn parse_and_emit_round_trip() {
        let text = "group demo\n\
                    gens x y   # two generators\n\
                    \n\
                    # a comment line\n\
                    rel x y^2 x^-1 y^-2\n\
                    rel 1\n\
                    formal true\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!("demo", p.name());
        assert_eq!(2, p.num_gens());
        assert_eq!(2, p.relators().len());
        assert!(p.relators()[1].is_identity());
        assert!(p.is_formal());
        assert!(!p.is_quasi_projective());
        assert_eq!(p, Presentation::parse(&p.emit()).unwrap());
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = Presentation::parse("group g\ngens x y\nrel x z").unwrap_err();
        assert_eq!(
            Error::UnknownGenerator {
                name: "z".into(),
                line: 3
            },
            err
        );

        let err = Presentation::parse("group g\ngens\nrel x").unwrap_err();
        assert_eq!(Error::EmptyGeneratorList, err);

        let err = Presentation::parse("gens x y").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));

        let err = Presentation::parse("group g\ngens x\nrel x^two").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, col: 5, .. }), "{err:?}");

        let err = Presentation::parse("group g\ngens x x").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, col: 8, .. }), "{err:?}");

        let err = Presentation::parse("group g\ngens x\nrelator x").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }
}
