use serde::{Deserialize, Serialize};

use super::FuzzyError;

/// Trapezoidal membership function with breakpoints `a <= b <= c <= d`.
///
/// Full membership on `[b, c]`, linear ramps on `[a, b)` and `(c, d)`, zero
/// outside the support. A collapsed edge (`a == b` or `c == d`) is a
/// shoulder: membership steps straight to 1 and stays there up to and
/// including the collapsed breakpoint.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 4]", into = "[f64; 4]")]
pub struct TrapezoidShape {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl TrapezoidShape {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self, FuzzyError> {
        let ordered = a <= b && b <= c && c <= d;
        if ![a, b, c, d].iter().all(|v| v.is_finite()) || !ordered {
            return Err(FuzzyError::InvalidShape { a, b, c, d });
        }
        Ok(Self { a, b, c, d })
    }

    pub fn breakpoints(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Lower and upper bound of the support (`a` and `d`).
    pub fn support(&self) -> (f64, f64) {
        (self.a, self.d)
    }

    /// Degree of membership of `x`, always in `[0, 1]`.
    pub fn degree(&self, x: f64) -> f64 {
        let Self { a, b, c, d } = *self;
        if x < a {
            0.0
        } else if x < b {
            (x - a) / (b - a)
        } else if x < c {
            1.0
        } else if x < d {
            (d - x) / (d - c)
        } else if c == d && x == d {
            // right shoulder: the plateau includes its closing breakpoint
            1.0
        } else {
            0.0
        }
    }
}

impl TryFrom<[f64; 4]> for TrapezoidShape {
    type Error = FuzzyError;

    fn try_from([a, b, c, d]: [f64; 4]) -> Result<Self, Self::Error> {
        Self::new(a, b, c, d)
    }
}

impl From<TrapezoidShape> for [f64; 4] {
    fn from(shape: TrapezoidShape) -> Self {
        shape.breakpoints()
    }
}
