//! Unit-aware parsing of command-line quantities and fixed-precision
//! number formatting.

use crate::error::{Error, Result};
use crate::minkowski::ThreeVector;

/// Significant digits used for every number the CLI prints as text.
pub const SIGNIFICANT_DIGITS: usize = 12;

fn number(s: &str, what: &str) -> Result<f64> {
    let v: f64 = s.trim().parse().map_err(|_| Error::Usage(format!("{what}: cannot parse `{}` as a number", s.trim())))?;
    if !v.is_finite() {
        return Err(Error::Usage(format!("{what}: `{}` is not finite", s.trim())));
    }
    Ok(v)
}

/// Intensity in W/cm^2. Accepts a plain number, an optional SI prefix
/// (`k M G T P E`) and an optional trailing `W/cm2` or `W/cm^2`:
/// `1e14`, `100T`, `100TW/cm2`.
pub fn parse_intensity(s: &str) -> Result<f64> {
    let mut body = s.trim();
    for unit in ["W/cm^2", "W/cm2", "w/cm^2", "w/cm2"] {
        if let Some(rest) = body.strip_suffix(unit) {
            body = rest.trim_end();
            break;
        }
    }
    let value = match body.parse::<f64>() {
        Ok(v) => v,
        Err(_) => {
            let prefix = body.chars().last().unwrap_or(' ');
            let head = &body[..body.len() - prefix.len_utf8().min(body.len())];
            let scale = match prefix {
                'k' => 1e3,
                'M' => 1e6,
                'G' => 1e9,
                'T' => 1e12,
                'P' => 1e15,
                'E' => 1e18,
                _ => return Err(Error::Usage(format!("intensity: cannot parse `{}`", s.trim()))),
            };
            number(head, "intensity")? * scale
        }
    };
    if !value.is_finite() {
        return Err(Error::Usage(format!("intensity: `{}` is not finite", s.trim())));
    }
    if value < 0.0 {
        return Err(Error::Usage(format!("intensity: `{}` is negative", s.trim())));
    }
    Ok(value)
}

/// Wavelength in meters from a value with a mandatory unit: `nm`, `um`
/// (also `μm`, `µm`) or `m`.
pub fn parse_wavelength(s: &str) -> Result<f64> {
    let t = s.trim();
    let (body, scale) = if let Some(b) = t.strip_suffix("nm") {
        (b, 1e-9)
    } else if let Some(b) = t.strip_suffix("um").or_else(|| t.strip_suffix("μm")).or_else(|| t.strip_suffix("µm")) {
        (b, 1e-6)
    } else if let Some(b) = t.strip_suffix('m') {
        (b, 1.0)
    } else {
        return Err(Error::Usage(format!("wavelength: `{t}` needs a unit (nm, um or m)")));
    };
    let value = number(body, "wavelength")? * scale;
    if value <= 0.0 {
        return Err(Error::Usage(format!("wavelength: `{t}` must be positive")));
    }
    Ok(value)
}

/// Three comma-separated components, e.g. `0.6,0,0`.
pub fn parse_triplet(s: &str, what: &str) -> Result<ThreeVector> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Usage(format!("{what}: expected three comma-separated numbers, got `{}`", s.trim())));
    }
    Ok([number(parts[0], what)?, number(parts[1], what)?, number(parts[2], what)?])
}

pub(crate) fn parse_real(s: &str, what: &str) -> Result<f64> {
    number(s, what)
}

/// `%g`-style rendering with [`SIGNIFICANT_DIGITS`] digits.
pub fn format_sig(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{v:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}
