use crate::error::{Error, Result};

pub const MIN_PRECISION_BITS: u32 = 16;
pub const DEFAULT_GUARD_BITS: u32 = 16;

/// Working precision for floating evaluation.
///
/// All operations performed under a context round to nearest at
/// `precision_bits + guard_bits`. Contexts are plain values and are passed
/// explicitly; there is no global rounding state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    precision_bits: u32,
    guard_bits: u32,
}

impl PrecisionContext {
    pub fn new(precision_bits: u32) -> Result<Self> {
        Self::with_guard_bits(precision_bits, DEFAULT_GUARD_BITS)
    }

    pub fn with_guard_bits(precision_bits: u32, guard_bits: u32) -> Result<Self> {
        if precision_bits < MIN_PRECISION_BITS {
            return Err(Error::Domain(format!(
                "precision_bits must be at least {MIN_PRECISION_BITS}, got {precision_bits}"
            )));
        }
        Ok(Self {
            precision_bits,
            guard_bits,
        })
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn guard_bits(&self) -> u32 {
        self.guard_bits
    }

    /// Bits carried by every intermediate value.
    pub fn working_bits(&self) -> u32 {
        self.precision_bits + self.guard_bits
    }

    /// Same target precision with `extra` additional guard bits.
    pub fn widened(&self, extra: u32) -> Self {
        Self {
            precision_bits: self.precision_bits,
            guard_bits: self.guard_bits + extra,
        }
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self {
            precision_bits: 256,
            guard_bits: DEFAULT_GUARD_BITS,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_tiny_precision() {
        assert!(PrecisionContext::new(15).is_err());
        let ctx = PrecisionContext::new(16).unwrap();
        assert_eq!(ctx.working_bits(), 16 + DEFAULT_GUARD_BITS);
        assert_eq!(ctx.widened(10).working_bits(), 26 + DEFAULT_GUARD_BITS);
        assert_eq!(ctx.widened(10).precision_bits(), 16);
    }
}
