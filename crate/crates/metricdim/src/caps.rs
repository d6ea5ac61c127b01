//! Resource caps shared by the exact solver and the BBR enumeration.
//! Exceeding a cap is a distinct error, never a silently wrong answer.

use std::time::Instant;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Caps {
    /// Maximum number of item pairs the exact solver will materialize.
    pub pair_cap: usize,
    /// Maximum number of candidate sets the BBR enumeration will test.
    pub bbr_cap: usize,
    /// Optional per-graph wall-clock budget.
    pub time_budget_ms: Option<u64>,
    started: Instant,
}

pub const DEFAULT_PAIR_CAP: usize = 2_000_000;
pub const DEFAULT_BBR_CAP: usize = 1_000_000;

impl Default for Caps {
    fn default() -> Self {
        Caps {
            pair_cap: DEFAULT_PAIR_CAP,
            bbr_cap: DEFAULT_BBR_CAP,
            time_budget_ms: None,
            started: Instant::now(),
        }
    }
}

impl Caps {
    pub fn new(pair_cap: usize, bbr_cap: usize, time_budget_ms: Option<u64>) -> Caps {
        Caps {
            pair_cap,
            bbr_cap,
            time_budget_ms,
            started: Instant::now(),
        }
    }

    /// Restarts the clock for the next graph in a campaign.
    pub fn restart(&self) -> Caps {
        Caps {
            started: Instant::now(),
            ..self.clone()
        }
    }

    pub fn check_deadline(&self) -> Result<()> {
        if let Some(budget_ms) = self.time_budget_ms {
            if self.started.elapsed().as_millis() as u64 > budget_ms {
                return Err(Error::TimeBudgetExceeded { budget_ms });
            }
        }
        Ok(())
    }
}
