//! Minkowski-space algebra: four-vectors, the (+,-,-,-) inner product,
//! pure boosts and causal classification.
//!
//! Boosts are *active*: a boost with velocity `v` takes a particle at rest
//! to a particle moving with velocity `+v` in the same frame.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Spatial 3-vector.
pub type ThreeVector = [f64; 3];

pub(crate) fn dot3(a: ThreeVector, b: ThreeVector) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn norm3(a: ThreeVector) -> f64 {
    dot3(a, a).sqrt()
}

pub(crate) fn scale3(a: ThreeVector, s: f64) -> ThreeVector {
    [a[0] * s, a[1] * s, a[2] * s]
}

pub(crate) fn cross3(a: ThreeVector, b: ThreeVector) -> ThreeVector {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn is_finite3(a: ThreeVector) -> bool {
    a.iter().all(|c| c.is_finite())
}

/// A contravariant four-vector `(t, x, y, z)` in natural units (c = 1).
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FourVector {
    t: f64,
    x: f64,
    y: f64,
    z: f64,
}

impl FourVector {
    pub const ZERO: FourVector = FourVector { t: 0.0, x: 0.0, y: 0.0, z: 0.0 };

    /// Creates a four-vector from its components.
    ///
    /// # Panics
    ///
    /// Panics if any component is NaN or infinite. Use [`FourVector::try_new`]
    /// for unvalidated input.
    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self::try_new(t, x, y, z).expect("four-vector components must be finite")
    }

    pub fn try_new(t: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        if [t, x, y, z].iter().all(|c| c.is_finite()) {
            Ok(FourVector { t, x, y, z })
        } else {
            Err(Error::NonFinite("four-vector"))
        }
    }

    pub fn from_parts(t: f64, space: ThreeVector) -> Self {
        Self::new(t, space[0], space[1], space[2])
    }

    // Arithmetic on finite inputs can still overflow; callers that build
    // from user data go through `new`/`try_new`.
    #[inline]
    const fn raw(t: f64, x: f64, y: f64, z: f64) -> Self {
        FourVector { t, x, y, z }
    }

    /// Time component.
    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    /// Spatial part as a 3-vector.
    pub fn space(&self) -> ThreeVector {
        [self.x, self.y, self.z]
    }

    pub fn components(&self) -> [f64; 4] {
        [self.t, self.x, self.y, self.z]
    }

    /// Minkowski inner product `a^0 b^0 - a.b`.
    pub fn inner(&self, other: &FourVector) -> f64 {
        inner(self, other)
    }

    /// Self inner product `a.a`.
    pub fn norm_sqr(&self) -> f64 {
        self.inner(self)
    }

    /// Euclidean norm of the four components, used as the scale for
    /// relative tolerances.
    pub fn euclidean_norm(&self) -> f64 {
        (self.t * self.t + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.components().iter().all(|c| c.is_finite())
    }

    /// Largest componentwise absolute difference.
    pub fn max_abs_diff(&self, other: &FourVector) -> f64 {
        self.components()
            .iter()
            .zip(other.components())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Minkowski inner product with signature (+,-,-,-).
///
/// Evaluated with compensated (FMA two-product / two-sum) accumulation, so
/// the result is as accurate as if computed in twice the working precision.
/// Null and nearly-null products such as `k.k` or a gauge-shifted `A.A`
/// cancel heavily and need this.
pub fn inner(a: &FourVector, b: &FourVector) -> f64 {
    let terms = [(a.t, b.t), (-a.x, b.x), (-a.y, b.y), (-a.z, b.z)];
    let mut sum = 0.0;
    let mut err = 0.0;
    for (u, v) in terms {
        let p = u * v;
        let pe = u.mul_add(v, -p);
        let s = sum + p;
        let z = s - sum;
        err += (sum - (s - z)) + (p - z) + pe;
        sum = s;
    }
    sum + err
}

/// `a + b` as a rounded sum and its exact rounding error.
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let z = s - a;
    (s, (a - (s - z)) + (b - z))
}

/// `a * b` as a rounded product and its exact rounding error.
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// A four-vector held as an unevaluated sum `hi + lo`, with `lo` of the
/// order of the rounding error of `hi`. Lets a gauge-shifted potential keep
/// the bits that plain addition would drop.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SplitFourVector {
    pub hi: FourVector,
    pub lo: FourVector,
}

impl SplitFourVector {
    pub fn value(&self) -> FourVector {
        self.hi + self.lo
    }

    /// `(hi + lo).(hi + lo)`, dropping only `lo.lo`.
    pub fn norm_sqr(&self) -> f64 {
        inner(&self.hi, &self.hi) + 2.0 * inner(&self.hi, &self.lo)
    }
}

impl From<FourVector> for SplitFourVector {
    fn from(hi: FourVector) -> Self {
        SplitFourVector { hi, lo: FourVector::ZERO }
    }
}

impl fmt::Display for FourVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.t, self.x, self.y, self.z)
    }
}

impl Index<usize> for FourVector {
    type Output = f64;
    fn index(&self, index: usize) -> &f64 {
        match index {
            0 => &self.t,
            1 => &self.x,
            2 => &self.y,
            3 => &self.z,
            _ => panic!("index out of bounds: a four-vector has 4 components but the index is {}", index),
        }
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, o: FourVector) -> FourVector {
        FourVector::raw(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for FourVector {
    fn add_assign(&mut self, o: FourVector) {
        *self = *self + o;
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, o: FourVector) -> FourVector {
        FourVector::raw(self.t - o.t, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        FourVector::raw(-self.t, -self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for FourVector {
    type Output = FourVector;
    fn mul(self, s: f64) -> FourVector {
        FourVector::raw(self.t * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<FourVector> for f64 {
    type Output = FourVector;
    fn mul(self, v: FourVector) -> FourVector {
        v * self
    }
}

/// A pure Lorentz boost, parametrised by a velocity in units of c.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LorentzBoost {
    velocity: ThreeVector,
}

impl LorentzBoost {
    /// Rejects `|velocity| >= 1` and non-finite input.
    pub fn new(velocity: ThreeVector) -> Result<Self> {
        if !is_finite3(velocity) {
            return Err(Error::NonFinite("boost velocity"));
        }
        let speed = norm3(velocity);
        if speed >= 1.0 {
            return Err(Error::Superluminal { speed });
        }
        Ok(LorentzBoost { velocity })
    }

    pub fn identity() -> Self {
        LorentzBoost { velocity: [0.0; 3] }
    }

    pub fn velocity(&self) -> ThreeVector {
        self.velocity
    }

    pub fn speed(&self) -> f64 {
        norm3(self.velocity)
    }

    pub fn gamma(&self) -> f64 {
        1.0 / (1.0 - dot3(self.velocity, self.velocity)).sqrt()
    }

    pub fn inverse(&self) -> Self {
        LorentzBoost { velocity: scale3(self.velocity, -1.0) }
    }

    pub fn is_identity(&self) -> bool {
        self.velocity == [0.0; 3]
    }

    /// Applies the boost to `x`.
    pub fn apply(&self, x: &FourVector) -> FourVector {
        let b2 = dot3(self.velocity, self.velocity);
        if b2 == 0.0 {
            return *x;
        }
        let gamma = 1.0 / (1.0 - b2).sqrt();
        let bx = dot3(self.velocity, x.space());
        // (gamma - 1)/b^2 written as gamma^2/(gamma + 1) to avoid cancellation
        // at small speeds.
        let coef = gamma * gamma / (gamma + 1.0) * bx + gamma * x.t;
        let v = self.velocity;
        FourVector::raw(
            gamma * (x.t + bx),
            x.x + coef * v[0],
            x.y + coef * v[1],
            x.z + coef * v[2],
        )
    }
}

/// Applies `boost` to `x`.
pub fn boost(boost: &LorentzBoost, x: &FourVector) -> FourVector {
    boost.apply(x)
}

/// Causal character of a four-vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CausalClass {
    Timelike,
    Lightlike,
    Spacelike,
}

/// Classifies `x` with a tolerance relative to its squared Euclidean norm,
/// so the answer does not depend on the overall scale of `x`.
pub fn classify(x: &FourVector, tol: f64) -> Result<CausalClass> {
    if !(tol > 0.0) {
        return Err(Error::invalid("tol", "must be positive"));
    }
    let s = x.euclidean_norm();
    let band = tol * s * s;
    let q = x.norm_sqr();
    Ok(if q.abs() <= band {
        CausalClass::Lightlike
    } else if q > band {
        CausalClass::Timelike
    } else {
        CausalClass::Spacelike
    })
}
