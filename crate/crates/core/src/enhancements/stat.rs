use serde::{Deserialize, Serialize};

/// Visit count and reward sum for one move, gram or AMAF entry.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct MoveStat {
    pub count: u64,
    pub sum: f64,
}

impl MoveStat {
    pub fn add(&mut self, reward: f64) {
        self.count += 1;
        self.sum += reward;
    }

    pub fn mean(&self) -> Option<f64> {
        (self.count > 0).then(|| self.sum / self.count as f64)
    }

    pub fn mean_or(&self, unseen: f64) -> f64 {
        self.mean().unwrap_or(unseen)
    }
}
