//! Eventually periodic bi-infinite points.

use crate::alphabet::{Block, Symbol};
use crate::error::{Error, Result};

/// The bi-infinite sequence `(left_period)^∞ · center · (right_period)^∞`.
///
/// `origin` is the coordinate of the first symbol of `center` (or of the
/// first copy of `right_period` when `center` is empty). Freshly built points
/// have `origin = 0`; shifting only moves the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    left_period: Block,
    center: Block,
    right_period: Block,
    origin: i64,
}

impl Point {
    pub fn new(left_period: Block, center: Block, right_period: Block) -> Result<Self> {
        Self::with_origin(left_period, center, right_period, 0)
    }

    pub fn with_origin(
        left_period: Block,
        center: Block,
        right_period: Block,
        origin: i64,
    ) -> Result<Self> {
        if left_period.is_empty() || right_period.is_empty() {
            return Err(Error::InvalidPoint("periods must be non-empty".into()));
        }
        Ok(Point {
            left_period,
            center,
            right_period,
            origin,
        })
    }

    /// The fixed point `a^∞`.
    pub fn constant(a: Symbol) -> Self {
        Point {
            left_period: Block(vec![a]),
            center: Block::empty(),
            right_period: Block(vec![a]),
            origin: 0,
        }
    }

    pub fn left_period(&self) -> &Block {
        &self.left_period
    }

    pub fn center(&self) -> &Block {
        &self.center
    }

    pub fn right_period(&self) -> &Block {
        &self.right_period
    }

    pub fn origin(&self) -> i64 {
        self.origin
    }

    pub fn symbol_at(&self, i: i64) -> Symbol {
        let rel = i - self.origin;
        let c = self.center.len() as i64;
        if rel < 0 {
            let l = self.left_period.len() as i64;
            self.left_period.0[rel.rem_euclid(l) as usize]
        } else if rel < c {
            self.center.0[rel as usize]
        } else {
            let r = self.right_period.len() as i64;
            self.right_period.0[(rel - c).rem_euclid(r) as usize]
        }
    }

    /// The block `x_i x_{i+1} … x_j`; empty when `j < i`.
    pub fn window(&self, i: i64, j: i64) -> Block {
        if j < i {
            return Block::empty();
        }
        Block((i..=j).map(|t| self.symbol_at(t)).collect())
    }

    /// `σ^k` of this point: coordinate `i` of the result is coordinate
    /// `i + k` of `self`.
    pub fn shift(&self, k: i64) -> Point {
        Point {
            origin: self.origin - k,
            ..self.clone()
        }
    }

    /// First coordinate at which the sequence is known to be right-periodic.
    pub(crate) fn right_start(&self) -> i64 {
        self.origin + self.center.len() as i64
    }

    /// Whether both points denote the same bi-infinite sequence.
    pub fn denotes_same(&self, other: &Point) -> bool {
        let lcm_l = lcm(self.left_period.len(), other.left_period.len()) as i64;
        let lcm_r = lcm(self.right_period.len(), other.right_period.len()) as i64;
        let lo = self.origin.min(other.origin) - lcm_l;
        let hi = self.right_start().max(other.right_start()) + lcm_r;
        (lo..=hi).all(|i| self.symbol_at(i) == other.symbol_at(i))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
