//! Output plumbing: CSV with `#` metadata lines, stdout-or-file targets,
//! and exact-rational decimal formatting.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use num::{BigInt, BigRational, Signed, ToPrimitive, Zero};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Where a command writes its table: stdout by default, a file with --out.
pub struct Sink {
    inner: Box<dyn Write>,
}

impl Sink {
    pub fn open(out: Option<&PathBuf>) -> io::Result<Sink> {
        let inner: Box<dyn Write> = match out {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(io::stdout().lock()),
        };
        Ok(Sink { inner })
    }

    pub fn line(&mut self, text: &str) -> io::Result<()> {
        self.inner.write_all(text.as_bytes())?;
        self.inner.write_all(b"\n")
    }

    /// The `# rimhook <version>` banner plus the config echo.
    pub fn header(&mut self, config: &str) -> io::Result<()> {
        self.line(&format!("# rimhook v{VERSION}"))?;
        self.line(&format!("# config: {config}"))
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.inner.flush()
    }
}

/// Correctly rounded decimal expansion of a nonnegative rational with
/// `digits` fractional digits.
pub fn rational_decimal(r: &BigRational, digits: usize) -> String {
    assert!(!r.is_negative(), "probabilities are nonnegative");
    let numerator = r.numer();
    let denominator = r.denom();
    let integer = numerator / denominator;
    let remainder = numerator - &integer * denominator;
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = &remainder * &scale;
    let mut frac = &scaled / denominator;
    let frac_rem = &scaled - &frac * denominator;
    // round half away from zero on the digit after the last kept one
    let mut integer = integer;
    if BigInt::from(2u32) * frac_rem >= *denominator {
        frac += 1;
        if frac == scale {
            frac = BigInt::zero();
            integer += 1;
        }
    }
    format!("{integer}.{frac:0>width$}", width = digits)
}

/// Parses a `x0:x1:steps` grid specification into the grid points.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid {spec:?} is not of the form x0:x1:steps"));
    }
    let x0: f64 = parts[0].parse().map_err(|_| format!("bad grid start {:?}", parts[0]))?;
    let x1: f64 = parts[1].parse().map_err(|_| format!("bad grid end {:?}", parts[1]))?;
    let steps: usize = parts[2].parse().map_err(|_| format!("bad grid steps {:?}", parts[2]))?;
    if steps < 2 || x1 <= x0 {
        return Err("grid needs x0 < x1 and steps >= 2".into());
    }
    Ok((0..steps)
        .map(|i| x0 + (x1 - x0) * i as f64 / (steps - 1) as f64)
        .collect())
}

/// Float with a fixed number of decimals; used everywhere a value lands in
/// CSV so reruns are byte-identical.
pub fn fixed(value: f64, decimals: usize) -> String {
    format!("{value:.decimals$}")
}

pub fn rational_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn decimal_expansion() {
        assert_eq!(rational_decimal(&rational(1, 8), 6), "0.125000");
        assert_eq!(rational_decimal(&rational(1, 3), 6), "0.333333");
        assert_eq!(rational_decimal(&rational(2, 3), 6), "0.666667");
        assert_eq!(rational_decimal(&rational(1, 1), 4), "1.0000");
        assert_eq!(rational_decimal(&rational(1999, 1000), 2), "2.00");
        assert_eq!(
            rational_decimal(&rational(1, 7), 30),
            "0.142857142857142857142857142857"
        );
    }

    #[test]
    fn grid_parsing() {
        let g = parse_grid("-1:1:5").unwrap();
        assert_eq!(g, vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert!(parse_grid("0:1").is_err());
        assert!(parse_grid("1:0:5").is_err());
        assert!(parse_grid("a:b:5").is_err());
    }
}
