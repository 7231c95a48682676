use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{PlaneWaveField, VectorPotential};
use crate::error::{Error, Result};
use crate::minkowski::{two_prod, two_sum, FourVector, SplitFourVector};

/// One Fourier mode of the gauge derivative.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Harmonic {
    pub harmonic: u32,
    pub cos_coeff: f64,
    pub sin_coeff: f64,
}

/// `Lambda'(phi)` as a truncated Fourier series. The generator depends on
/// spacetime only through the phase, so `d_mu Lambda = k_mu Lambda'`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GaugeGenerator {
    modes: Vec<Harmonic>,
}

impl GaugeGenerator {
    pub const MAX_HARMONICS: usize = 16;
    pub const MAX_COEFF: f64 = 10.0;

    pub fn new(modes: Vec<Harmonic>) -> Result<Self> {
        if modes.iter().any(|m| !(m.cos_coeff.is_finite() && m.sin_coeff.is_finite())) {
            return Err(Error::NonFinite("gauge coefficient"));
        }
        Ok(GaugeGenerator { modes })
    }

    /// `Lambda' = 0`.
    pub fn trivial() -> Self {
        GaugeGenerator::default()
    }

    /// Random generator with harmonics `1..=harmonics` and coefficients
    /// uniform in `[-10, 10]`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, harmonics: usize) -> Self {
        let n = harmonics.min(Self::MAX_HARMONICS);
        let modes = (1..=n as u32)
            .map(|h| Harmonic {
                harmonic: h,
                cos_coeff: rng.gen_range(-Self::MAX_COEFF..=Self::MAX_COEFF),
                sin_coeff: rng.gen_range(-Self::MAX_COEFF..=Self::MAX_COEFF),
            })
            .collect();
        GaugeGenerator { modes }
    }

    pub fn modes(&self) -> &[Harmonic] {
        &self.modes
    }

    /// `Lambda'(phi)`.
    pub fn derivative_at(&self, phi: f64) -> f64 {
        self.modes
            .iter()
            .map(|m| {
                let a = f64::from(m.harmonic) * phi;
                m.cos_coeff * a.cos() + m.sin_coeff * a.sin()
            })
            .sum()
    }
}

/// Gauge-transforms an arbitrary phase-dependent potential:
/// `A~(phi) = A(phi) + k Lambda'(phi)`.
pub fn apply_gauge<'a, F>(
    wave_vector: FourVector,
    potential: F,
    generator: &'a GaugeGenerator,
) -> impl Fn(f64) -> FourVector + 'a
where
    F: Fn(f64) -> FourVector + 'a,
{
    move |phi| potential(phi) + wave_vector * generator.derivative_at(phi)
}

/// A plane wave seen in a gauge other than the radiation gauge.
#[derive(Clone, Copy, Debug)]
pub struct GaugedField<'a> {
    pub field: &'a PlaneWaveField,
    pub generator: &'a GaugeGenerator,
}

impl VectorPotential for GaugedField<'_> {
    fn wave_vector(&self) -> FourVector {
        self.field.wave_vector()
    }

    fn potential_at(&self, phi: f64) -> FourVector {
        self.field.potential_at(phi) + self.field.wave_vector() * self.generator.derivative_at(phi)
    }

    fn potential_split_at(&self, phi: f64) -> SplitFourVector {
        let a = self.field.potential_at(phi);
        let k = self.field.wave_vector_split();
        let g = self.generator.derivative_at(phi);
        let mut hi = [0.0; 4];
        let mut lo = [0.0; 4];
        for i in 0..4 {
            let (p, pe) = two_prod(k.hi[i], g);
            let (s, se) = two_sum(a[i], p);
            hi[i] = s;
            lo[i] = se + pe + k.lo[i] * g;
        }
        SplitFourVector { hi: FourVector::new(hi[0], hi[1], hi[2], hi[3]), lo: FourVector::new(lo[0], lo[1], lo[2], lo[3]) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planewave::{cycle_average_abs_square, Envelope, Polarization};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn field(pol: Polarization) -> PlaneWaveField {
        PlaneWaveField::new(0.7, [0.3, -0.5, 0.8], pol, 1.3, Envelope::Monochromatic).unwrap()
    }

    #[test]
    fn trivial_gauge_is_identity() {
        let f = field(Polarization::Linear);
        let g = GaugeGenerator::trivial();
        let gauged = GaugedField { field: &f, generator: &g };
        for i in 0..50 {
            let phi = 0.13 * f64::from(i);
            assert_eq!(gauged.potential_at(phi), f.potential_at(phi));
        }
    }

    #[test]
    fn pointwise_square_is_gauge_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for pol in [Polarization::Linear, Polarization::Circular] {
            let f = field(pol);
            let g = GaugeGenerator::random(&mut rng, 8);
            let shifted = apply_gauge(f.wave_vector(), |phi| f.potential_at(phi), &g);
            for i in 0..200 {
                let phi = 0.05 * f64::from(i);
                let a = f.potential_at(phi);
                let b = shifted(phi);
                let scale = a.norm_sqr().abs().max(1.0);
                assert!((a.norm_sqr() - b.norm_sqr()).abs() <= 1e-12 * scale * 100.0);
                assert!(b.t() != 0.0 || g.derivative_at(phi) == 0.0);
            }
        }
    }

    #[test]
    fn split_square_is_gauge_invariant_to_working_precision() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for pol in [Polarization::Linear, Polarization::Circular] {
            let f = PlaneWaveField::new(1.9, [0.3, -0.5, 0.8], pol, 0.1, Envelope::Monochromatic).unwrap();
            assert!(f.wave_vector_split().norm_sqr().abs() < 1e-28);
            let g = GaugeGenerator::random(&mut rng, 8);
            let gauged = GaugedField { field: &f, generator: &g };
            for i in 0..500 {
                let phi = 0.0137 * f64::from(i);
                let a = f.potential_at(phi).norm_sqr();
                let b = gauged.potential_split_at(phi).norm_sqr();
                assert!((a - b).abs() <= 1e-12 * f.a0() * f.a0(), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn gauged_potential_is_not_transverse_but_average_is_unchanged() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f = field(Polarization::Linear);
        let g = GaugeGenerator::random(&mut rng, 8);
        let gauged = GaugedField { field: &f, generator: &g };
        let phi = 0.4;
        let k = f.wave_vector();
        // k.A~ = k.A + k.k Lambda' = 0 still, but A~ has a time component.
        assert!(gauged.potential_at(phi).t().abs() > 0.0);
        let before = cycle_average_abs_square(|p| f.potential_at(p), 0.0, 4096);
        let after = cycle_average_abs_square(|p| gauged.potential_at(p), 0.0, 4096);
        assert!((before - after).abs() <= 1e-12 * before, "{before} vs {after}");
        assert!(k.inner(&gauged.potential_at(phi)).abs() < 1e-12 * k.euclidean_norm() * 200.0);
    }

    #[test]
    fn rejects_non_finite_coefficients() {
        let bad = vec![Harmonic { harmonic: 1, cos_coeff: f64::NAN, sin_coeff: 0.0 }];
        assert!(GaugeGenerator::new(bad).is_err());
    }
}
