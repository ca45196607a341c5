use crate::error::{Error, Result};

/// Size caps enforced before any exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_carrier: usize,
    pub max_atoms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_carrier: 81,
            max_atoms: 16,
        }
    }
}

impl Limits {
    pub fn with_max_carrier(mut self, max_carrier: usize) -> Self {
        self.max_carrier = max_carrier;
        self
    }

    pub fn check_carrier(&self, what: &'static str, size: usize) -> Result<()> {
        if size > self.max_carrier {
            return Err(Error::CapExceeded {
                what,
                requested: size,
                cap: self.max_carrier,
            });
        }
        Ok(())
    }

    pub fn check_atoms(&self, atoms: usize) -> Result<()> {
        if atoms > self.max_atoms {
            return Err(Error::CapExceeded {
                what: "atoms",
                requested: atoms,
                cap: self.max_atoms,
            });
        }
        Ok(())
    }
}
