//! Weighted string edit distance (Wagner–Fischer).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Costs of the three edit operations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EditCosts {
    insert: f64,
    delete: f64,
    change: f64,
}

impl EditCosts {
    pub fn new(insert: f64, delete: f64, change: f64) -> Result<Self> {
        let costs = Self { insert, delete, change };
        costs.validate()?;
        Ok(costs)
    }

    pub fn insert(&self) -> f64 {
        self.insert
    }

    pub fn delete(&self) -> f64 {
        self.delete
    }

    pub fn change(&self) -> f64 {
        self.change
    }

    fn validate(&self) -> Result<()> {
        // `!(x >= 0)` also rejects NaN
        if [self.insert, self.delete, self.change].iter().any(|c| !(*c >= 0.0)) {
            return Err(Error::NegativeCost);
        }
        Ok(())
    }
}

impl Default for EditCosts {
    fn default() -> Self {
        Self { insert: 1.0, delete: 1.0, change: 1.0 }
    }
}

/// Minimum total cost of insertions, deletions and changes turning `a` into `b`.
/// The sequences may differ in length. `O(|a| |b|)` time, `O(|b|)` space.
pub fn edit_distance(a: &[usize], b: &[usize], costs: &EditCosts) -> Result<f64> {
    costs.validate()?;
    let mut prev: Vec<f64> = (0..=b.len()).map(|j| j as f64 * costs.insert).collect();
    let mut cur = vec![0.0; b.len() + 1];
    for (i, &x) in a.iter().enumerate() {
        cur[0] = (i + 1) as f64 * costs.delete;
        for (j, &y) in b.iter().enumerate() {
            let substitute = prev[j] + if x == y { 0.0 } else { costs.change };
            let delete = prev[j + 1] + costs.delete;
            let insert = cur[j] + costs.insert;
            cur[j + 1] = substitute.min(delete).min(insert);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev[b.len()])
}
