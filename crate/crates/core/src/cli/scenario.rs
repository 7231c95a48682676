//! Scenario files: flat `key = value` text describing one trajectory run.
//!
//! ```text
//! # flat-top pulse, electron initially at rest
//! a0        = 1.0             # or: intensity = 1e18, wavelength = 800nm
//! omega     = 1.0             # natural units, only with a0
//! pol       = linear          # linear | circular
//! direction = 0, 0, 1         # need not be normalized
//! envelope  = flat_top 4 2    # monochromatic | flat_top R P | sin2 N | gaussian SIGMA CUT
//! electron  = rest            # or px, py, pz in units of m_e c
//! phase     = 0, 62.83        # optional for pulses: defaults to the support
//! step      = 0.00628         # optional, rad
//! cycles    = 1               # plateau periods averaged
//! outputs   = summary, average, convergence
//! ```
//!
//! Keys may appear once. The field is given either as laser parameters
//! (`intensity` and `wavelength`) or in natural units (`a0`, optional
//! `omega`), never both. Blank lines and `#` comments are ignored.

use crate::error::{Error, Result};
use crate::minkowski::{norm3, FourVector, ThreeVector};
use crate::planewave::{from_laser_params, Envelope, LaserParams, PhysicalConstants, PlaneWaveField, Polarization};
use crate::trajectory::DEFAULT_STEP;

use super::units::{parse_intensity, parse_real, parse_triplet, parse_wavelength};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FieldSpec {
    Laser { intensity: f64, wavelength: f64 },
    Natural { a0: f64, omega: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ElectronSpec {
    Rest,
    Momentum(ThreeVector),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    Summary,
    Average,
    Convergence,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub field: FieldSpec,
    pub polarization: Polarization,
    pub direction: ThreeVector,
    pub envelope: Envelope,
    pub electron: ElectronSpec,
    pub phase: Option<(f64, f64)>,
    pub step: f64,
    pub cycles: usize,
    /// `None` means the default set for the envelope.
    pub outputs: Option<Vec<Output>>,
}

const KEYS: [&str; 12] =
    ["intensity", "wavelength", "a0", "omega", "pol", "direction", "envelope", "electron", "phase", "step", "cycles", "outputs"];

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

// Attach the line number to errors raised by value parsers.
fn at<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        Error::Usage(m) => parse_err(line, m),
        other => parse_err(line, other.to_string()),
    })
}

fn parse_envelope(v: &str) -> Result<Envelope> {
    let words: Vec<&str> = v.split(|c: char| c.is_whitespace() || c == ',').filter(|w| !w.is_empty()).collect();
    let count = |s: &str| -> Result<u32> {
        s.parse().map_err(|_| Error::Usage(format!("envelope: `{s}` is not a whole number of cycles")))
    };
    let env = match words.as_slice() {
        ["monochromatic"] => Envelope::Monochromatic,
        ["flat_top", r, p] => Envelope::FlatTop { ramp_cycles: count(r)?, plateau_cycles: count(p)? },
        ["sin2", n] => Envelope::Sin2 { total_cycles: count(n)? },
        ["gaussian", s, c] => Envelope::Gaussian {
            sigma_cycles: parse_real(s, "envelope")?,
            cutoff_sigmas: parse_real(c, "envelope")?,
        },
        _ => {
            return Err(Error::Usage(format!(
                "envelope: expected `monochromatic`, `flat_top R P`, `sin2 N` or `gaussian SIGMA CUT`, got `{v}`"
            )))
        }
    };
    env.validate()?;
    Ok(env)
}

fn parse_outputs(v: &str) -> Result<Vec<Output>> {
    v.split(',')
        .map(|w| match w.trim() {
            "summary" => Ok(Output::Summary),
            "average" => Ok(Output::Average),
            "convergence" => Ok(Output::Convergence),
            other => Err(Error::Usage(format!("outputs: unknown report `{other}`"))),
        })
        .collect()
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Scenario> {
        let mut seen: Vec<(&str, usize, &str)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once('=').ok_or_else(|| parse_err(line, "expected `key = value`"))?;
            let key = key.trim();
            let key = KEYS.iter().find(|k| **k == key).ok_or_else(|| parse_err(line, format!("unknown key `{key}`")))?;
            if let Some((_, first, _)) = seen.iter().find(|(k, _, _)| k == key) {
                return Err(parse_err(line, format!("duplicate key `{key}` (first set on line {first})")));
            }
            seen.push((key, line, value.trim()));
        }
        let get = |k: &str| seen.iter().find(|(key, _, _)| *key == k).map(|(_, l, v)| (*l, *v));
        let end = text.lines().count() + 1;

        let laser_keys: Vec<(usize, &str)> = ["intensity", "wavelength"].iter().filter_map(|k| get(k)).collect();
        let natural_keys: Vec<(usize, &str)> = ["a0", "omega"].iter().filter_map(|k| get(k)).collect();
        if !laser_keys.is_empty() && !natural_keys.is_empty() {
            let line = laser_keys.iter().chain(&natural_keys).map(|(l, _)| *l).max().unwrap_or(end);
            return Err(parse_err(line, "field given both as laser parameters and as a0/omega; use one form"));
        }
        let field = if !laser_keys.is_empty() {
            let (li, intensity) = get("intensity").ok_or_else(|| parse_err(end, "`wavelength` needs `intensity`"))?;
            let (lw, wavelength) = get("wavelength").ok_or_else(|| parse_err(end, "`intensity` needs `wavelength`"))?;
            FieldSpec::Laser {
                intensity: at(li, parse_intensity(intensity))?,
                wavelength: at(lw, parse_wavelength(wavelength))?,
            }
        } else {
            let (la, a0) = get("a0").ok_or_else(|| {
                parse_err(end, "no field given: set `a0` (natural units) or `intensity` and `wavelength`")
            })?;
            let a0 = at(la, parse_real(a0, "a0"))?;
            if a0 < 0.0 {
                return Err(parse_err(la, "a0 must be non-negative"));
            }
            let omega = match get("omega") {
                Some((l, v)) => {
                    let w = at(l, parse_real(v, "omega"))?;
                    if w <= 0.0 {
                        return Err(parse_err(l, "omega must be positive"));
                    }
                    w
                }
                None => 1.0,
            };
            FieldSpec::Natural { a0, omega }
        };

        let polarization = match get("pol") {
            Some((l, v)) => at(l, v.parse())?,
            None => Polarization::Linear,
        };
        let direction = match get("direction") {
            Some((l, v)) => {
                let d = at(l, parse_triplet(v, "direction"))?;
                if norm3(d) == 0.0 {
                    return Err(parse_err(l, "direction must be nonzero"));
                }
                d
            }
            None => [0.0, 0.0, 1.0],
        };
        let envelope = match get("envelope") {
            Some((l, v)) => at(l, parse_envelope(v))?,
            None => return Err(parse_err(end, "missing `envelope`")),
        };
        let electron = match get("electron") {
            Some((_, "rest")) | None => ElectronSpec::Rest,
            Some((l, v)) => ElectronSpec::Momentum(at(l, parse_triplet(v, "electron"))?),
        };
        let phase = match get("phase") {
            Some((l, v)) => {
                let parts: Vec<&str> = v.split(',').collect();
                if parts.len() != 2 {
                    return Err(parse_err(l, "phase: expected `start, end`"));
                }
                let (a, b) = (at(l, parse_real(parts[0], "phase"))?, at(l, parse_real(parts[1], "phase"))?);
                if b <= a {
                    return Err(parse_err(l, "phase: end must exceed start"));
                }
                Some((a, b))
            }
            None => None,
        };
        if phase.is_none() && envelope.support().is_none() {
            return Err(parse_err(end, "a monochromatic scenario needs an explicit `phase` range"));
        }
        let step = match get("step") {
            Some((l, v)) => {
                let s = at(l, parse_real(v, "step"))?;
                if s <= 0.0 {
                    return Err(parse_err(l, "step must be positive"));
                }
                s
            }
            None => DEFAULT_STEP,
        };
        let cycles = match get("cycles") {
            Some((l, v)) => {
                v.parse::<usize>().ok().filter(|c| *c > 0).ok_or_else(|| parse_err(l, "cycles: expected a positive integer"))?
            }
            None => 1,
        };
        let outputs = match get("outputs") {
            Some((l, v)) => Some(at(l, parse_outputs(v))?),
            None => None,
        };
        Ok(Scenario { field, polarization, direction, envelope, electron, phase, step, cycles, outputs })
    }

    /// The natural-unit field this scenario describes.
    pub fn build_field(&self, constants: &PhysicalConstants) -> Result<PlaneWaveField> {
        let (a0, omega) = match self.field {
            FieldSpec::Natural { a0, omega } => (a0, omega),
            FieldSpec::Laser { intensity, wavelength } => {
                let f = from_laser_params(&LaserParams::new(intensity, wavelength, self.polarization)?, constants)?;
                (f.a0(), f.omega())
            }
        };
        PlaneWaveField::new(omega, self.direction, self.polarization, a0, self.envelope)
    }

    /// On-shell initial momentum with `m = 1`.
    pub fn initial_momentum(&self) -> FourVector {
        match self.electron {
            ElectronSpec::Rest => FourVector::new(1.0, 0.0, 0.0, 0.0),
            ElectronSpec::Momentum(p) => FourVector::from_parts((1.0 + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt(), p),
        }
    }

    pub fn phase_range(&self) -> (f64, f64) {
        self.phase.or_else(|| self.envelope.support()).expect("checked at parse time")
    }

    /// Requested reports, defaulting to everything the envelope supports.
    pub fn outputs(&self) -> Vec<Output> {
        self.outputs.clone().unwrap_or_else(|| {
            let mut v = vec![Output::Summary];
            if self.envelope.plateau().is_some_and(|(lo, _)| lo.is_finite()) {
                v.push(Output::Average);
            }
            v.push(Output::Convergence);
            v
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FLAT: &str = "\
# flat top
a0 = 1.0
pol = circular   # trailing comment
envelope = flat_top 4 2
electron = rest
";

    #[test]
    fn parses_natural_form() {
        let s = Scenario::parse(FLAT).unwrap();
        assert_eq!(s.field, FieldSpec::Natural { a0: 1.0, omega: 1.0 });
        assert_eq!(s.polarization, Polarization::Circular);
        assert_eq!(s.envelope, Envelope::FlatTop { ramp_cycles: 4, plateau_cycles: 2 });
        assert_eq!(s.electron, ElectronSpec::Rest);
        assert_eq!(s.step, DEFAULT_STEP);
        assert_eq!(s.outputs(), vec![Output::Summary, Output::Average, Output::Convergence]);
        assert_eq!(s.phase_range(), (0.0, 20.0 * std::f64::consts::PI));
    }

    #[test]
    fn parses_laser_form() {
        let s = Scenario::parse("intensity = 100T\nwavelength = 800nm\nenvelope = sin2 8\nelectron = 0.1, 0, 0\n").unwrap();
        match s.field {
            FieldSpec::Laser { intensity, wavelength } => {
                assert_eq!(intensity, 1e14);
                assert!((wavelength - 8e-7).abs() < 1e-20);
            }
            _ => panic!("expected laser form"),
        }
        let p = s.initial_momentum();
        assert!((p.norm_sqr() - 1.0).abs() < 1e-15);
        assert_eq!(s.outputs(), vec![Output::Summary, Output::Convergence]);
        let f = s.build_field(&PhysicalConstants::codata2018()).unwrap();
        assert!(f.a0() > 0.0 && f.a0() < 0.01);
    }

    fn line_of(text: &str) -> usize {
        match Scenario::parse(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of("a0 = 1\n\nenvelope = sin2 x\n"), 3);
        assert_eq!(line_of("a0 = 1\nenvelope = sin2 4\nfoo = 3\n"), 3);
        assert_eq!(line_of("a0 = 1\nenvelope = sin2 4\na0 = 2\n"), 3);
        assert_eq!(line_of("a0 = 1\nenvelope sin2 4\n"), 2);
        assert_eq!(line_of("a0 = 1\nintensity = 1e14\nwavelength = 800nm\nenvelope = sin2 4\n"), 3);
        assert_eq!(line_of("# c\nwavelength = 800\nintensity = 1\nenvelope = sin2 4\n"), 2);
        assert_eq!(line_of("a0 = 1\nenvelope = flat_top 0 2\n"), 2);
        assert_eq!(line_of("a0 = 1\nenvelope = monochromatic\n"), 3);
        assert_eq!(line_of("envelope = sin2 4\n"), 2);
        assert_eq!(line_of("a0 = 1\nenvelope = sin2 4\nphase = 3, 1\n"), 3);
        assert_eq!(line_of("a0 = 1\nenvelope = sin2 4\npol = elliptic\n"), 3);
    }
}
