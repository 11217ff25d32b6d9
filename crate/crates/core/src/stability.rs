//! Verification harness for stable neighborhoods of closed geodesics
//! on hyperbolic surfaces presented by explicit deck groups in
//! SL(2,ℝ): enumerate lifts of a free-homotopy class, test the
//! width-`d` stability predicate (two lifts cross iff their width-`d`
//! neighborhoods meet), lower-bound self-intersection numbers from
//! axis crossings, and tabulate length against crossing number.
//!
//! Every check runs over finitely many lifts; reports carry their
//! truncation depth and never claim more than the enumerated range.

use std::collections::BTreeMap;

use nalgebra::Matrix2;
use serde::{Deserialize, Serialize};

use crate::collar_tube::stable_width;
use crate::error::{Error, Result};
use crate::models::h2::{
    geodesics_cross_h2, mobius_boundary, neighborhoods_overlap, BoundaryPoint, GeodesicH2,
};
use crate::types::{Length, Width};
use crate::words::{
    canonical_rotation, cyclic_reduce, free_reduce, inverse_word, reduced_words, Letter,
};

/// Endpoint-pair tolerance for deduplicating enumerated lifts.
pub const LIFT_DEDUP_TOL: f64 = 1e-9;
/// Band around `|trace| = 2` inside which an element is rejected as
/// not (numerically verifiably) hyperbolic.
pub const HYPERBOLIC_TRACE_TOL: f64 = 1e-9;
/// Tolerance on `|det − 1|` for group generators.
const DETERMINANT_TOL: f64 = 1e-9;
/// Tolerance for merging crossing parameters on the quotient circle.
const CROSSING_MERGE_TOL: f64 = 1e-9;

/// Deck group of a hyperbolic surface acting on the upper half plane:
/// labelled generators in SL(2,ℝ).
#[derive(Debug, Clone)]
pub struct SurfaceGroupData {
    labels: Vec<char>,
    generators: Vec<Matrix2<f64>>,
}

impl SurfaceGroupData {
    /// Labels must be distinct ASCII lowercase letters (their
    /// uppercase forms denote inverses in word notation); matrices
    /// must have determinant 1 within `1e−9`.
    pub fn new(entries: Vec<(char, Matrix2<f64>)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidInput(
                "a surface group needs at least one generator".into(),
            ));
        }
        let mut labels = Vec::with_capacity(entries.len());
        let mut generators = Vec::with_capacity(entries.len());
        for (label, m) in entries {
            if !label.is_ascii_lowercase() {
                return Err(Error::InvalidInput(format!(
                    "generator label {label:?} must be an ASCII lowercase letter"
                )));
            }
            if labels.contains(&label) {
                return Err(Error::InvalidInput(format!(
                    "duplicate generator label {label:?}"
                )));
            }
            if !m.iter().all(|x| x.is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "generator {label:?} has non-finite entries"
                )));
            }
            let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
            if (det - 1.0).abs() > DETERMINANT_TOL {
                return Err(Error::InvalidInput(format!(
                    "generator {label:?} has determinant {det}, not 1 within {DETERMINANT_TOL:e}"
                )));
            }
            labels.push(label);
            generators.push(m);
        }
        Ok(SurfaceGroupData { labels, generators })
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn labels(&self) -> &[char] {
        &self.labels
    }

    pub fn generators(&self) -> &[Matrix2<f64>] {
        &self.generators
    }

    /// Parses word notation: a lowercase label is the generator, its
    /// uppercase form the inverse (`"aBa"` = `a·b⁻¹·a`).
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut letters: Vec<Letter> = Vec::with_capacity(text.len());
        for ch in text.chars() {
            let base = ch.to_ascii_lowercase();
            let idx = self
                .labels
                .iter()
                .position(|&l| l == base)
                .ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "letter {ch:?} does not name a generator (labels: {:?})",
                        self.labels
                    ))
                })?;
            letters.push((idx, if ch.is_ascii_lowercase() { 1 } else { -1 }));
        }
        let word = Word::new(letters)?;
        self.check_word(&word)?;
        Ok(word)
    }

    /// Renders a word back into label notation.
    pub fn word_string(&self, word: &Word) -> String {
        word.letters()
            .iter()
            .map(|&(i, e)| {
                let l = self.labels[i];
                if e > 0 {
                    l
                } else {
                    l.to_ascii_uppercase()
                }
            })
            .collect()
    }

    fn check_word(&self, word: &Word) -> Result<()> {
        for &(i, _) in word.letters() {
            if i >= self.generators.len() {
                return Err(Error::InvalidInput(format!(
                    "word uses generator index {i} but the group has only {}",
                    self.generators.len()
                )));
            }
        }
        Ok(())
    }

    fn letter_matrix(&self, (i, e): Letter) -> Matrix2<f64> {
        let m = &self.generators[i];
        if e > 0 {
            *m
        } else {
            // adjugate = exact inverse for determinant 1
            Matrix2::new(m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)])
        }
    }

    fn word_matrix(&self, letters: &[Letter]) -> Matrix2<f64> {
        let mut m = Matrix2::identity();
        for &l in letters {
            m *= self.letter_matrix(l);
        }
        m
    }
}

/// A nonempty, freely and cyclically reduced word in the generators,
/// stored as its lexicographically least cyclic rotation so that every
/// representative of a free-homotopy class names the same `Word`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        for &(_, e) in &letters {
            if e != 1 && e != -1 {
                return Err(Error::InvalidInput(format!(
                    "letter exponents must be ±1, got {e}"
                )));
            }
        }
        let reduced = cyclic_reduce(&free_reduce(&letters));
        if reduced.is_empty() {
            return Err(Error::InvalidInput(
                "word reduces to the identity and names no closed geodesic".into(),
            ));
        }
        Ok(Word {
            letters: canonical_rotation(&reduced),
        })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty words
    }

    /// The class traversed backwards (canonicalized like any word).
    pub fn inverse(&self) -> Word {
        Word {
            letters: canonical_rotation(&inverse_word(&self.letters)),
        }
    }
}

/// The closed geodesic of a hyperbolic class: representing matrix
/// (trace normalized non-negative), length `2·arccosh(|tr|/2)`, and
/// axis with endpoints ordered (repelling, attracting).
#[derive(Debug, Clone)]
pub struct ClosedGeodesicH2 {
    word: Word,
    matrix: Matrix2<f64>,
    length: Length,
    axis: GeodesicH2,
}

impl ClosedGeodesicH2 {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn matrix(&self) -> &Matrix2<f64> {
        &self.matrix
    }

    pub fn length(&self) -> Length {
        self.length
    }

    /// Axis endpoints: `axis().a` repelling, `axis().b` attracting.
    pub fn axis(&self) -> &GeodesicH2 {
        &self.axis
    }
}

/// Evaluates a word to its closed geodesic.
///
/// # Errors
/// Elliptic or parabolic products (`|tr| ≤ 2 + 1e−9`) have no axis.
pub fn geodesic_from_word(group: &SurfaceGroupData, word: &Word) -> Result<ClosedGeodesicH2> {
    group.check_word(word)?;
    let mut m = group.word_matrix(word.letters());
    if m.trace() < 0.0 {
        m = -m; // same element of PSL(2,ℝ)
    }
    let tr = m.trace();
    if tr <= 2.0 + HYPERBOLIC_TRACE_TOL {
        return Err(Error::NotHyperbolic { trace_abs: tr });
    }
    let length = Length::from_computed(2.0 * (tr / 2.0).acosh());
    let (rep, att) = fixed_points(&m, tr);
    Ok(ClosedGeodesicH2 {
        word: word.clone(),
        matrix: m,
        length,
        axis: GeodesicH2::new(rep, att)?,
    })
}

/// Real fixed points of a hyperbolic `[[a,b],[c,d]]` with `tr > 2`:
/// roots of `c·x² + (d−a)·x − b = 0`, ordered (repelling, attracting).
/// A fixed point `x` is attracting iff `|c·x + d| > 1` (the derivative
/// of the Möbius map there is `(cx+d)^{−2}`).
fn fixed_points(m: &Matrix2<f64>, tr: f64) -> (BoundaryPoint, BoundaryPoint) {
    let (a, b, c, d) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
    if c == 0.0 {
        // upper triangular: fixed points b/(d−a) and ∞; ∞ attracts
        // iff |a| > |d|
        let finite = BoundaryPoint::Finite(b / (d - a) + 0.0);
        if a.abs() > d.abs() {
            (finite, BoundaryPoint::Infinity)
        } else {
            (BoundaryPoint::Infinity, finite)
        }
    } else {
        // stable quadratic: avoid cancellation in −B ± √disc
        let bq = d - a;
        let disc = tr * tr - 4.0;
        let sgn = if bq >= 0.0 { 1.0 } else { -1.0 };
        let q = -0.5 * (bq + sgn * disc.sqrt());
        let r1 = q / c + 0.0;
        let r2 = -b / q + 0.0;
        if (c * r1 + d).abs() > 1.0 {
            (BoundaryPoint::Finite(r2), BoundaryPoint::Finite(r1))
        } else {
            (BoundaryPoint::Finite(r1), BoundaryPoint::Finite(r2))
        }
    }
}

/// Axes of the conjugates `g·M·g⁻¹` of the geodesic's matrix over all
/// freely reduced conjugators `g` of length ≤ `depth`, in breadth-first
/// order starting with the geodesic's own axis, deduplicated by
/// unordered endpoint pairs at [`LIFT_DEDUP_TOL`]. These are the
/// connected lifts of the closed geodesic visible at this depth.
pub fn enumerate_lifts(
    group: &SurfaceGroupData,
    geodesic: &ClosedGeodesicH2,
    depth: usize,
) -> Result<Vec<GeodesicH2>> {
    group.check_word(geodesic.word())?;
    let base = *geodesic.axis();
    let mut lifts = vec![base];
    for conjugator in reduced_words(group.generator_count(), depth) {
        let g = group.word_matrix(&conjugator);
        let a = mobius_boundary(&g, base.a);
        let b = mobius_boundary(&g, base.b);
        if a.approx_eq(b, LIFT_DEDUP_TOL) {
            // the conjugator contracted the axis's endpoints below the
            // dedup resolution: that lift sits at hyperbolic distance
            // ≳ 2·log(1/tol) ≈ 40 from every resolved lift, far past
            // any workable neighborhood width, so dropping it is the
            // same truncation the endpoint dedup already applies
            continue;
        }
        let lift = GeodesicH2::new(a, b)?;
        if !lifts.iter().any(|l| l.same_unordered(&lift, LIFT_DEDUP_TOL)) {
            lifts.push(lift);
        }
    }
    Ok(lifts)
}

/// One stability failure: a pair of lifts (indices into the
/// enumeration) where crossing and neighborhood overlap disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub pair: (usize, usize),
    pub crossing: bool,
    pub overlap: bool,
}

/// Result of checking the stability predicate over all enumerated
/// lift pairs. `violations` contains exactly the pairs where crossing
/// and overlap disagree; stability predicts it stays empty at width
/// `stable_width(length)` for every depth.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StabilityReport {
    pub word: String,
    pub geodesic_length: Length,
    pub width: Width,
    pub lifts_examined: usize,
    pub violations: Vec<ViolationRecord>,
    pub truncation_depth: usize,
}

/// Checks the stability predicate at the given width over every
/// unordered pair of lifts enumerated to `depth`.
///
/// # Errors
/// Width must be positive and finite; pair predicates propagate their
/// own failures (e.g. lifts sharing an endpoint).
pub fn verify_stability(
    group: &SurfaceGroupData,
    geodesic: &ClosedGeodesicH2,
    width: Width,
    depth: usize,
) -> Result<StabilityReport> {
    // a Width is never NaN by construction, so <= covers every bad case
    if width.is_infinite() || width.value() <= 0.0 {
        return Err(Error::Domain(format!(
            "stability width must be positive and finite, got {width}"
        )));
    }
    let lifts = enumerate_lifts(group, geodesic, depth)?;
    let mut violations = Vec::new();
    for i in 0..lifts.len() {
        for j in (i + 1)..lifts.len() {
            let crossing = geodesics_cross_h2(&lifts[i], &lifts[j])?;
            let overlap = neighborhoods_overlap(&lifts[i], width, &lifts[j], width)?;
            if crossing != overlap {
                violations.push(ViolationRecord {
                    pair: (i, j),
                    crossing,
                    overlap,
                });
            }
        }
    }
    Ok(StabilityReport {
        word: group.word_string(geodesic.word()),
        geodesic_length: geodesic.length(),
        width,
        lifts_examined: lifts.len(),
        violations,
        truncation_depth: depth,
    })
}

/// Lower bound for the self-intersection number of the closed
/// geodesic: crossings between the base axis and enumerated conjugate
/// axes are mapped to their crossing parameter along the axis, reduced
/// modulo the translation length (the action of the cyclic group
/// generated by the word's matrix), and merged at `1e−9`. Each
/// self-intersection point contributes two strand parameters, so the
/// bound is `⌈count/2⌉`. Monotone nondecreasing in `depth`.
pub fn self_intersection_lower_bound(
    group: &SurfaceGroupData,
    geodesic: &ClosedGeodesicH2,
    depth: usize,
) -> Result<usize> {
    if depth == 0 {
        return Err(Error::Domain(
            "self-intersection search depth must be ≥ 1".into(),
        ));
    }
    let ell = geodesic.length().value();
    let standardize = axis_to_standard(geodesic.axis());
    let lifts = enumerate_lifts(group, geodesic, depth)?;
    let mut params: Vec<f64> = Vec::new();
    for lift in &lifts[1..] {
        let c = mobius_boundary(&standardize, lift.a);
        let d = mobius_boundary(&standardize, lift.b);
        let (BoundaryPoint::Finite(x), BoundaryPoint::Finite(y)) = (c, d) else {
            continue; // endpoint shared with the axis: no transversal crossing
        };
        if x * y < 0.0 {
            // the lift crosses the standardized axis (the imaginary
            // axis) at height √(−x·y)
            let s = 0.5 * (-x * y).ln();
            params.push(s.rem_euclid(ell));
        }
    }
    params.sort_by(f64::total_cmp);
    let mut distinct: Vec<f64> = Vec::new();
    for s in params {
        if distinct.last().is_some_and(|&p| s - p <= CROSSING_MERGE_TOL) {
            continue;
        }
        distinct.push(s);
    }
    // the circle wraps: the largest parameter may coincide with the
    // smallest one shifted by ℓ
    if distinct.len() > 1
        && (distinct[0] + ell - distinct[distinct.len() - 1]) <= CROSSING_MERGE_TOL
    {
        distinct.pop();
    }
    Ok(distinct.len().div_ceil(2))
}

/// Möbius matrix sending the axis to the standard geodesic
/// (0 repelling, ∞ attracting).
fn axis_to_standard(axis: &GeodesicH2) -> Matrix2<f64> {
    match (axis.a, axis.b) {
        (BoundaryPoint::Finite(p), BoundaryPoint::Finite(q)) => {
            Matrix2::new(1.0, -p, 1.0, -q)
        }
        (BoundaryPoint::Finite(p), BoundaryPoint::Infinity) => {
            Matrix2::new(1.0, -p, 0.0, 1.0)
        }
        (BoundaryPoint::Infinity, BoundaryPoint::Finite(q)) => {
            Matrix2::new(0.0, 1.0, 1.0, -q)
        }
        (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => {
            unreachable!("geodesics have distinct endpoints")
        }
    }
}

/// One row of the length-versus-crossing table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrendBin {
    /// Self-intersection lower bound shared by the bin.
    pub crossings: usize,
    /// Shortest geodesic length observed in the bin.
    pub min_length: Length,
    /// Word attaining the minimum (first in enumeration order on ties).
    pub witness: String,
}

/// Enumerates every cyclically reduced class of word length ≤
/// `max_word_length` (one canonical rotation per class), bins the
/// classes by their self-intersection lower bound at `depth`, and
/// reports the minimum geodesic length per bin, ascending in crossing
/// number. Empty bins are omitted. Deterministic for fixed inputs.
pub fn crossing_length_trend(
    group: &SurfaceGroupData,
    max_word_length: usize,
    depth: usize,
) -> Result<Vec<TrendBin>> {
    if max_word_length == 0 || depth == 0 {
        return Err(Error::Domain(
            "trend bounds must be ≥ 1 (word length and depth)".into(),
        ));
    }
    let mut bins: BTreeMap<usize, (Length, String)> = BTreeMap::new();
    for letters in reduced_words(group.generator_count(), max_word_length) {
        if cyclic_reduce(&letters) != letters || canonical_rotation(&letters) != letters {
            continue; // not the canonical representative of its class
        }
        let word = Word { letters };
        let geodesic = match geodesic_from_word(group, &word) {
            Ok(g) => g,
            Err(Error::NotHyperbolic { .. }) => continue,
            Err(e) => return Err(e),
        };
        let k = self_intersection_lower_bound(group, &geodesic, depth)?;
        let entry = bins.entry(k);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert((geodesic.length(), group.word_string(&word)));
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                if geodesic.length() < o.get().0 {
                    o.insert((geodesic.length(), group.word_string(&word)));
                }
            }
        }
    }
    Ok(bins
        .into_iter()
        .map(|(crossings, (min_length, witness))| TrendBin {
            crossings,
            min_length,
            witness,
        })
        .collect())
}

/// Outcome of checking that two distinct closed geodesics have
/// disjoint stable neighborhoods. `claim` is `None` unless the caller
/// asserted the separation hypothesis (the two geodesics separated by
/// a disjoint union of simple closed geodesics) — the harness cannot
/// detect that condition, and without it no disjointness claim is
/// sound.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DisjointnessReport {
    pub words: (String, String),
    pub widths: (Width, Width),
    pub pairs_examined: usize,
    pub crossing_pairs: usize,
    pub overlapping_pairs: usize,
    pub truncation_depth: usize,
    pub claim: Option<bool>,
}

/// Checks disjointness of the stable neighborhoods (widths
/// `stable_width(ℓᵢ)`) of two distinct closed geodesics across all
/// enumerated lift pairs.
///
/// # Errors
/// The two words must name distinct unoriented classes.
pub fn check_disjoint_stable_neighborhoods(
    group: &SurfaceGroupData,
    g1: &ClosedGeodesicH2,
    g2: &ClosedGeodesicH2,
    depth: usize,
    separated_asserted: bool,
) -> Result<DisjointnessReport> {
    if g1.word() == g2.word() || *g1.word() == g2.word().inverse() {
        return Err(Error::InvalidInput(
            "disjointness needs two distinct closed geodesics; the words name \
             the same unoriented class"
                .into(),
        ));
    }
    let w1 = stable_width(g1.length())?;
    let w2 = stable_width(g2.length())?;
    let lifts1 = enumerate_lifts(group, g1, depth)?;
    let lifts2 = enumerate_lifts(group, g2, depth)?;
    let mut crossing_pairs = 0;
    let mut overlapping_pairs = 0;
    for l1 in &lifts1 {
        for l2 in &lifts2 {
            if geodesics_cross_h2(l1, l2)? {
                crossing_pairs += 1;
            }
            if neighborhoods_overlap(l1, w1, l2, w2)? {
                overlapping_pairs += 1;
            }
        }
    }
    Ok(DisjointnessReport {
        words: (
            group.word_string(g1.word()),
            group.word_string(g2.word()),
        ),
        widths: (w1, w2),
        pairs_examined: lifts1.len() * lifts2.len(),
        crossing_pairs,
        overlapping_pairs,
        truncation_depth: depth,
        claim: separated_asserted.then_some(overlapping_pairs == 0),
    })
}
