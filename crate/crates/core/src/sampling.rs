//! Reproducible rational sampling.
//!
//! The generator is the 64-bit linear congruential generator
//! `state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64)`
//! seeded with `state = seed`. Each draw advances the state once and uses its
//! high 32 bits, so samples are identical on every platform.

use num_bigint::BigInt;

use crate::exactgeom::{HPolytope, Point, Rational};

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        self.state
    }

    pub fn next_u32(&mut self) -> u32 {
        (self.next_u64() >> 32) as u32
    }

    /// `lo + (hi - lo) * u / 2^32` for the next 32-bit draw `u`.
    pub fn next_in(&mut self, lo: &Rational, hi: &Rational) -> Rational {
        let u = Rational::new(BigInt::from(self.next_u32()), BigInt::from(1u64 << 32));
        lo + (hi - lo) * u
    }

    pub fn next_point(&mut self, lo: &[Rational], hi: &[Rational]) -> Point {
        lo.iter().zip(hi).map(|(l, h)| self.next_in(l, h)).collect()
    }
}

/// Bounding box of all polytopes, widened by 5% of its extent on each side.
pub fn sampling_box(polytopes: &[HPolytope]) -> (Point, Point) {
    let (mut lo, mut hi) = polytopes[0].bounding_box();
    for p in &polytopes[1..] {
        let (l, h) = p.bounding_box();
        for k in 0..lo.len() {
            if l[k] < lo[k] {
                lo[k] = l[k].clone();
            }
            if h[k] > hi[k] {
                hi[k] = h[k].clone();
            }
        }
    }
    let margin = Rational::new(BigInt::from(1), BigInt::from(20));
    for k in 0..lo.len() {
        let pad = (&hi[k] - &lo[k]) * &margin;
        lo[k] -= &pad;
        hi[k] += pad;
    }
    (lo, hi)
}
