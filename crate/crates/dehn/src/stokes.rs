//! Combinatorial Stokes integrals on Cayley paths of SOL-type groups and
//! the exponential-area lower-bound certificates they produce.
//!
//! Elements of `G = (K1 x K2) x| Z` are kept as exact rational
//! coordinates `(x, y, n)`; archimedean and `p`-adic norms evaluate to
//! rationals, so every integral, bound, and comparison here is an exact
//! equality test rather than a tolerance test.

use crate::rat::{padic_valuation, rat, rational_power, Rational};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StokesError {
    #[error("path is not closed")]
    NotClosed,
    #[error("|l1| must satisfy |l1| > 1 and |l2| >= |l1|, got |l1| = {0}, |l2| = {1}")]
    BadNormalization(String, String),
    #[error("ultrametric integrand pair needs a non-archimedean second field")]
    VariantUnavailable,
}

/// Exact absolute value on `Q`: the usual one or `p^(-v_p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormModel {
    Archimedean,
    PAdic(u32),
}

impl NormModel {
    pub fn eval(&self, q: &Rational) -> Rational {
        if q.is_zero() {
            return Rational::zero();
        }
        match self {
            NormModel::Archimedean => q.abs(),
            NormModel::PAdic(p) => {
                let v = padic_valuation(q, *p).expect("nonzero");
                rational_power(&rat(*p as i64), -v)
            }
        }
    }

    pub fn is_archimedean(&self) -> bool {
        matches!(self, NormModel::Archimedean)
    }
}

/// The group `(K1 x K2) x| Z` acting by `(l1, l2^{-1})`, normalized so
/// that `|l2| >= |l1| > 1`.
#[derive(Clone, Debug)]
pub struct SolModel {
    pub norm1: NormModel,
    pub norm2: NormModel,
    pub l1: Rational,
    pub l2: Rational,
}

impl SolModel {
    pub fn new(
        norm1: NormModel,
        norm2: NormModel,
        l1: Rational,
        l2: Rational,
    ) -> Result<Self, StokesError> {
        let n1 = norm1.eval(&l1);
        let n2 = norm2.eval(&l2);
        if n1 <= Rational::one() || n2 < n1 {
            return Err(StokesError::BadNormalization(
                crate::rat::format_rational(&n1),
                crate::rat::format_rational(&n2),
            ));
        }
        Ok(SolModel {
            norm1,
            norm2,
            l1,
            l2,
        })
    }

    pub fn real(l1: Rational, l2: Rational) -> Result<Self, StokesError> {
        SolModel::new(NormModel::Archimedean, NormModel::Archimedean, l1, l2)
    }
}

/// Group element `(x, y, n)` with the affine-on-the-right product
/// `(x,y,n)(x',y',n') = (x + l1^n x', y + l2^{-n} y', n + n')`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SolElement {
    pub x: Rational,
    pub y: Rational,
    pub n: i64,
}

impl SolElement {
    pub fn identity() -> Self {
        SolElement {
            x: Rational::zero(),
            y: Rational::zero(),
            n: 0,
        }
    }
}

impl SolModel {
    pub fn mul(&self, a: &SolElement, b: &SolElement) -> SolElement {
        SolElement {
            x: &a.x + rational_power(&self.l1, a.n) * &b.x,
            y: &a.y + rational_power(&self.l2, -a.n) * &b.y,
            n: a.n + b.n,
        }
    }

    pub fn inverse(&self, a: &SolElement) -> SolElement {
        SolElement {
            x: -rational_power(&self.l1, -a.n) * &a.x,
            y: -rational_power(&self.l2, a.n) * &a.y,
            n: -a.n,
        }
    }
}

/// Generator letters of the standard generating set `{x, y, t}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    X(i8),
    Y(i8),
    T(i8),
}

impl Gen {
    pub fn element(&self) -> SolElement {
        let mut e = SolElement::identity();
        match self {
            Gen::X(s) => e.x = rat(*s as i64),
            Gen::Y(s) => e.y = rat(*s as i64),
            Gen::T(s) => e.n = *s as i64,
        }
        e
    }

    pub fn inverse(&self) -> Gen {
        match self {
            Gen::X(s) => Gen::X(-s),
            Gen::Y(s) => Gen::Y(-s),
            Gen::T(s) => Gen::T(-s),
        }
    }
}

/// Inverse of a word (reverse and invert letters).
pub fn invert_word(word: &[Gen]) -> Vec<Gen> {
    word.iter().rev().map(Gen::inverse).collect()
}

/// A closed path in the Cayley graph: vertices `c_0, ..., c_n` with
/// `c_0 = c_n`, indexed cyclically.
#[derive(Clone, Debug)]
pub struct ClosedPath {
    pub vertices: Vec<SolElement>,
}

impl ClosedPath {
    /// Walks a word from `base`; errors unless the word is a relation.
    pub fn from_word(
        model: &SolModel,
        word: &[Gen],
        base: &SolElement,
    ) -> Result<Self, StokesError> {
        let mut vertices = vec![base.clone()];
        let mut cur = base.clone();
        for g in word {
            cur = model.mul(&cur, &g.element());
            vertices.push(cur.clone());
        }
        if vertices.first() != vertices.last() {
            return Err(StokesError::NotClosed);
        }
        Ok(ClosedPath { vertices })
    }

    /// The triangle `(g0, g0 h, g0 h')` as a closed path of length three.
    pub fn triangle(model: &SolModel, g0: &SolElement, h: &SolElement, hp: &SolElement) -> Self {
        ClosedPath {
            vertices: vec![g0.clone(), model.mul(g0, h), model.mul(g0, hp), g0.clone()],
        }
    }

    /// Edge count (one less than the vertex list).
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Left-translates every vertex.
    pub fn translate(&self, model: &SolModel, g: &SolElement) -> ClosedPath {
        ClosedPath {
            vertices: self.vertices.iter().map(|v| model.mul(g, v)).collect(),
        }
    }
}

/// Values of the integrands: real scalars or elements of the product
/// ring `K1 x K2` with componentwise operations and the max norm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KValue {
    Scalar(Rational),
    Pair(Rational, Rational),
}

impl KValue {
    pub fn zero_like(&self) -> KValue {
        match self {
            KValue::Scalar(_) => KValue::Scalar(Rational::zero()),
            KValue::Pair(_, _) => KValue::Pair(Rational::zero(), Rational::zero()),
        }
    }

    pub fn add(&self, other: &KValue) -> KValue {
        match (self, other) {
            (KValue::Scalar(a), KValue::Scalar(b)) => KValue::Scalar(a + b),
            (KValue::Pair(a1, a2), KValue::Pair(b1, b2)) => KValue::Pair(a1 + b1, a2 + b2),
            _ => panic!("mixed integrand values"),
        }
    }

    pub fn sub(&self, other: &KValue) -> KValue {
        match (self, other) {
            (KValue::Scalar(a), KValue::Scalar(b)) => KValue::Scalar(a - b),
            (KValue::Pair(a1, a2), KValue::Pair(b1, b2)) => KValue::Pair(a1 - b1, a2 - b2),
            _ => panic!("mixed integrand values"),
        }
    }

    pub fn mul(&self, other: &KValue) -> KValue {
        match (self, other) {
            (KValue::Scalar(a), KValue::Scalar(b)) => KValue::Scalar(a * b),
            (KValue::Pair(a1, a2), KValue::Pair(b1, b2)) => KValue::Pair(a1 * b1, a2 * b2),
            _ => panic!("mixed integrand values"),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            KValue::Scalar(a) => a.is_zero(),
            KValue::Pair(a, b) => a.is_zero() && b.is_zero(),
        }
    }

    /// Norm in `K`: usual absolute value for scalars, max of the two
    /// component norms for pairs.
    pub fn norm(&self, model: &SolModel) -> Rational {
        match self {
            KValue::Scalar(a) => a.abs(),
            KValue::Pair(a, b) => {
                let n1 = model.norm1.eval(a);
                let n2 = model.norm2.eval(b);
                if n1 >= n2 {
                    n1
                } else {
                    n2
                }
            }
        }
    }
}

/// `int_c beta d alpha = sum_i beta(c_i)(alpha(c_{i+1}) - alpha(c_{i-1}))`
/// over the cyclic index set of a closed path.
pub fn stokes_integral(
    path: &ClosedPath,
    beta: &dyn Fn(&SolElement) -> KValue,
    alpha: &dyn Fn(&SolElement) -> KValue,
) -> KValue {
    let n = path.len();
    if n == 0 {
        return KValue::Scalar(Rational::zero());
    }
    let alphas: Vec<KValue> = (0..n).map(|i| alpha(&path.vertices[i])).collect();
    let mut acc: Option<KValue> = None;
    for i in 0..n {
        let b = beta(&path.vertices[i]);
        let next = &alphas[(i + 1) % n];
        let prev = &alphas[(i + n - 1) % n];
        let term = b.mul(&next.sub(prev));
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc.unwrap()
}

/// The two integrand pairs used for the lower bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegrandVariant {
    /// `A1(x) = |x|`, `B1(y) = max(0, 1 - |y|)`: real-valued.
    Real,
    /// `A2(x) = (x, 0)`, `B2(y) = 1 - (0, y)` on `|y| < 1` and `0`
    /// elsewhere: `K`-valued, needs an ultrametric second factor.
    Ultrametric,
}

/// A coordinate integrand bound to a model.
pub type Integrand<'a> = Box<dyn Fn(&SolElement) -> KValue + 'a>;

/// Builds the `(A, B)` pair of the chosen variant for a model.
pub fn standard_integrands(
    model: &SolModel,
    variant: IntegrandVariant,
) -> Result<(Integrand<'_>, Integrand<'_>), StokesError> {
    match variant {
        IntegrandVariant::Real => {
            let alpha = move |g: &SolElement| KValue::Scalar(model.norm1.eval(&g.x));
            let beta = move |g: &SolElement| {
                let ny = model.norm2.eval(&g.y);
                let v = Rational::one() - ny;
                KValue::Scalar(if v > Rational::zero() {
                    v
                } else {
                    Rational::zero()
                })
            };
            Ok((Box::new(alpha), Box::new(beta)))
        }
        IntegrandVariant::Ultrametric => {
            if model.norm2.is_archimedean() {
                return Err(StokesError::VariantUnavailable);
            }
            let alpha = move |g: &SolElement| KValue::Pair(g.x.clone(), Rational::zero());
            let beta = move |g: &SolElement| {
                if model.norm2.eval(&g.y) < Rational::one() {
                    // the unit of K minus the second-component embedding
                    KValue::Pair(Rational::one(), Rational::one() - &g.y)
                } else {
                    KValue::Pair(Rational::zero(), Rational::zero())
                }
            };
            Ok((Box::new(alpha), Box::new(beta)))
        }
    }
}

/// The word `gamma_{1,n} = t^n x t^-n y t^n x^-1 t^-n y^-1`.
fn gamma_1_word(n: usize) -> Vec<Gen> {
    let mut w = Vec::with_capacity(4 * n + 4);
    w.extend(std::iter::repeat_n(Gen::T(1), n));
    w.push(Gen::X(1));
    w.extend(std::iter::repeat_n(Gen::T(-1), n));
    w.push(Gen::Y(1));
    w.extend(std::iter::repeat_n(Gen::T(1), n));
    w.push(Gen::X(-1));
    w.extend(std::iter::repeat_n(Gen::T(-1), n));
    w.push(Gen::Y(-1));
    w
}

/// `y_k` of the commutator sequence: `y_1 = 1`; for ultrametric second
/// factors `y_k = l2^k` afterwards, else the constant 1. Any nonempty
/// subset of the sequence then sums to an element of norm at least one.
fn y_k(model: &SolModel, k: usize) -> Rational {
    if k <= 1 || model.norm2.is_archimedean() {
        Rational::one()
    } else {
        rational_power(&model.l2, k as i64)
    }
}

/// The word for `gamma_{k,n}`, built by the commutator recursion
/// `gamma_{k,n} = gamma_{k-1,n} g_k gamma_{k-1,n}^{-1} g_k^{-1}` with
/// `g_k = (0, y_k, 0)`.
pub fn gamma_word(model: &SolModel, k: usize, n: usize) -> Vec<GammaLetter> {
    assert!(k >= 1 && n >= 1);
    let mut word: Vec<GammaLetter> = gamma_1_word(n)
        .into_iter()
        .map(GammaLetter::Standard)
        .collect();
    for level in 2..=k {
        let yk = y_k(model, level);
        let mut next = word.clone();
        next.push(GammaLetter::YTranslation(yk.clone()));
        next.extend(word.iter().rev().map(GammaLetter::invert));
        next.push(GammaLetter::YTranslation(-yk));
        word = next;
    }
    word
}

/// Letters of the iterated-commutator loops: standard generators plus the
/// bounded `y`-translations `g_k`.
#[derive(Clone, Debug)]
pub enum GammaLetter {
    Standard(Gen),
    YTranslation(Rational),
}

impl GammaLetter {
    fn invert(&self) -> GammaLetter {
        match self {
            GammaLetter::Standard(g) => GammaLetter::Standard(g.inverse()),
            GammaLetter::YTranslation(y) => GammaLetter::YTranslation(-y.clone()),
        }
    }

    fn element(&self) -> SolElement {
        match self {
            GammaLetter::Standard(g) => g.element(),
            GammaLetter::YTranslation(y) => SolElement {
                x: Rational::zero(),
                y: y.clone(),
                n: 0,
            },
        }
    }
}

/// The closed path of `gamma_{k,n}` based at the identity. Lengths obey
/// `len(1, n) = 4n + 4` and `len(k+1, n) = 2 len(k, n) + 2`.
pub fn gamma_path(model: &SolModel, k: usize, n: usize) -> ClosedPath {
    let word = gamma_word(model, k, n);
    let mut vertices = vec![SolElement::identity()];
    let mut cur = SolElement::identity();
    for letter in &word {
        cur = model.mul(&cur, &letter.element());
        vertices.push(cur.clone());
    }
    assert_eq!(
        vertices.first(),
        vertices.last(),
        "gamma path must close up"
    );
    ClosedPath { vertices }
}

#[derive(Clone, Debug)]
pub struct GammaIntegralCheck {
    pub computed: KValue,
    pub computed_norm: Rational,
    pub predicted_norm: Rational,
    pub equal: bool,
}

/// Integrates the variant's `beta d alpha` over `gamma_{k,n}` and
/// compares the norm with the closed form `|2 l1^n|`.
pub fn gamma_integral_check(
    model: &SolModel,
    k: usize,
    n: usize,
    variant: IntegrandVariant,
) -> Result<GammaIntegralCheck, StokesError> {
    let (alpha, beta) = standard_integrands(model, variant)?;
    let path = gamma_path(model, k, n);
    let computed = stokes_integral(&path, beta.as_ref(), alpha.as_ref());
    let computed_norm = computed.norm(model);
    let two_l1n = rat(2) * rational_power(&model.l1, n as i64);
    let predicted_norm = model.norm1.eval(&two_l1n);
    Ok(GammaIntegralCheck {
        equal: computed_norm == predicted_norm,
        computed,
        computed_norm,
        predicted_norm,
    })
}

/// All group elements spelled by words of length at most `radius`.
pub fn ball(model: &SolModel, radius: usize) -> Vec<SolElement> {
    let gens = [
        Gen::X(1),
        Gen::X(-1),
        Gen::Y(1),
        Gen::Y(-1),
        Gen::T(1),
        Gen::T(-1),
    ];
    let mut seen: std::collections::BTreeSet<SolElement> = std::collections::BTreeSet::new();
    let mut frontier = vec![SolElement::identity()];
    seen.insert(SolElement::identity());
    for _ in 0..radius {
        let mut next = Vec::new();
        for e in &frontier {
            for g in &gens {
                let f = model.mul(e, &g.element());
                if seen.insert(f.clone()) {
                    next.push(f);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

/// An exact constant dominating `|int_T beta d alpha|` over all triangles
/// `(g0, g0 h, g0 h')` with `h, h'` of word length at most `radius`.
///
/// From the translation-invariance of the bound, the integral over such a
/// triangle is at most `|y_h|^mu |x_h'| + |y_h'|^mu |x_h|`; since
/// `0 < mu <= 1`, `|y|^mu <= max(1, |y|)`, giving a rational constant
/// without evaluating the irrational exponent `mu`.
pub fn triangle_bound(model: &SolModel, radius: usize) -> Rational {
    assert!(radius >= 1);
    let pts = ball(model, radius);
    let data: Vec<(Rational, Rational)> = pts
        .iter()
        .map(|e| {
            let fx = model.norm1.eval(&e.x);
            let ny = model.norm2.eval(&e.y);
            let fy = if ny > Rational::one() {
                ny
            } else {
                Rational::one()
            };
            (fx, fy)
        })
        .collect();
    let mut best = Rational::zero();
    for (fx_h, fy_h) in &data {
        for (fx_hp, fy_hp) in &data {
            let bound = fy_h * fx_hp + fy_hp * fx_h;
            if bound > best {
                best = bound;
            }
        }
    }
    best
}

#[derive(Clone, Debug)]
pub struct LowerBoundRow {
    pub n: usize,
    /// `|2 l1^n|`, the exact loop integral norm.
    pub integral_norm: Rational,
    /// Certified area lower bound against radius-`r0` relators.
    pub area_bound: Rational,
}

#[derive(Clone, Debug)]
pub struct LowerBoundTable {
    pub relator_radius: usize,
    pub triangle_constant: Rational,
    pub rows: Vec<LowerBoundRow>,
    /// Both factors ultrametric: a single bounded constant dominates all
    /// decomposable loops, so unbounded integrals certify that no
    /// bounded-relator presentation exists at all.
    pub asymptotically_infinite_area: bool,
}

/// Per-`n` certified lower bounds on the area of `gamma_{k,n}` with
/// respect to any presentation whose relators fit in radius `r0`.
pub fn lower_bound_table(
    model: &SolModel,
    k: usize,
    n_max: usize,
    relator_radius: Option<usize>,
) -> LowerBoundTable {
    let r0 = relator_radius.unwrap_or(4);
    let c = triangle_bound(model, r0);
    let variant = if model.norm2.is_archimedean() {
        IntegrandVariant::Real
    } else {
        IntegrandVariant::Ultrametric
    };
    let rows = (1..=n_max)
        .map(|n| {
            let check = gamma_integral_check(model, k, n, variant)
                .expect("variant is chosen to match the model");
            LowerBoundRow {
                n,
                integral_norm: check.computed_norm.clone(),
                area_bound: check.computed_norm / &c,
            }
        })
        .collect();
    LowerBoundTable {
        relator_radius: r0,
        triangle_constant: c,
        rows,
        asymptotically_infinite_area: !model.norm1.is_archimedean()
            && !model.norm2.is_archimedean(),
    }
}
