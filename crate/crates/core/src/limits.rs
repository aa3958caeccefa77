//! Size caps for enumerations and exhaustive searches.
//!
//! Every cap can be raised process-wide with [`set_cap_override`]; the
//! effective cap is the larger of the default and the override.

use core::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const ALL_PARTITIONS_CAP: usize = 12;
pub const NONCROSSING_CAP: usize = 14;
pub const INTERVAL_CAP: usize = 30;
pub const CROSSING_NUMBER_CAP: usize = 14;
pub const KS_CAP: usize = 12;
pub const COMPOUND_KS_CAP: usize = 10;
pub const SCALAR_FAMILY_CAP: usize = 20;

static OVERRIDE: AtomicUsize = AtomicUsize::new(0);

/// Raise every cap to at least `cap`. Passing `None` restores the defaults.
pub fn set_cap_override(cap: Option<usize>) {
    OVERRIDE.store(cap.unwrap_or(0), Ordering::Relaxed);
}

pub fn cap_override() -> Option<usize> {
    match OVERRIDE.load(Ordering::Relaxed) {
        0 => None,
        c => Some(c),
    }
}

pub fn effective(default: usize) -> usize {
    default.max(OVERRIDE.load(Ordering::Relaxed))
}

pub(crate) fn check(what: &'static str, n: usize, default: usize) -> Result<()> {
    let cap = effective(default);
    if n > cap {
        Err(Error::CapExceeded { what, n, cap })
    } else {
        Ok(())
    }
}
