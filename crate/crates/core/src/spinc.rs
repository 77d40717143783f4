//! Spin^C bookkeeping by relative Euler classes.
//!
//! A ledger records `e_λ ∈ H_1(H_λ)` for each handlebody together with the
//! accumulated Lutz-twist classes since a base structure. A twist along `γ`
//! in `H_λ` sets `e_λ ← e_λ - 2[γ]`. The base structure itself is opaque:
//! only differences of `c_1` between ledgers sharing a base are computed.

use num_bigint::BigInt;

use crate::diagram::{next, Trisection};
use crate::error::{Error, Result};
use crate::pairings::{cocycle_from_dual_rep, H2DualRep, OneOneCocycle};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpinCLedger {
    base_id: String,
    euler: [Vec<BigInt>; 3],
    twists: [Vec<BigInt>; 3],
}

fn zero_coords(t: &Trisection) -> [Vec<BigInt>; 3] {
    [0, 1, 2].map(|l| vec![BigInt::from(0); t.handlebody(l).dimension()])
}

fn add(x: &[BigInt], y: &[BigInt], k: i64) -> Vec<BigInt> {
    x.iter().zip(y).map(|(a, b)| a + b * k).collect()
}

impl SpinCLedger {
    /// The base structure, with all relative Euler classes zero.
    pub fn base(t: &Trisection, base_id: impl Into<String>) -> Self {
        SpinCLedger { base_id: base_id.into(), euler: zero_coords(t), twists: zero_coords(t) }
    }

    /// A base with given Euler classes (quotient coordinates in `H_1(H_λ)`).
    pub fn with_euler(t: &Trisection, base_id: impl Into<String>, euler: [Vec<BigInt>; 3]) -> Result<Self> {
        for (l, e) in euler.iter().enumerate() {
            let n = t.handlebody(l).dimension();
            if e.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: e.len() });
            }
        }
        Ok(SpinCLedger { base_id: base_id.into(), euler, twists: zero_coords(t) })
    }

    pub fn base_id(&self) -> &str {
        &self.base_id
    }

    pub fn euler(&self) -> &[Vec<BigInt>; 3] {
        &self.euler
    }

    /// Twist classes accumulated since the base, per handlebody.
    pub fn twists(&self) -> &[Vec<BigInt>; 3] {
        &self.twists
    }

    /// Lutz twist along `gamma` (quotient coordinates) in handlebody
    /// `lambda ∈ {1, 2, 3}`.
    pub fn lutz_shift(&self, t: &Trisection, lambda: usize, gamma: &[BigInt]) -> Result<Self> {
        if !(1..=3).contains(&lambda) {
            return Err(Error::InvalidIndex { index: lambda, range: "1..=3" });
        }
        let l = lambda - 1;
        let n = t.handlebody(l).dimension();
        if gamma.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: gamma.len() });
        }
        let mut out = self.clone();
        out.euler[l] = t.handlebody(l).project(&t.handlebody(l).lift(&add(&self.euler[l], gamma, -2)));
        out.twists[l] = t.handlebody(l).project(&t.handlebody(l).lift(&add(&self.twists[l], gamma, 1)));
        Ok(out)
    }

    /// Twists along `a_λ` in every handlebody.
    pub fn act(&self, t: &Trisection, a: &H2DualRep) -> Result<Self> {
        a.check(t)?;
        let classes = a.classes(t);
        let mut out = self.clone();
        for (l, c) in classes.iter().enumerate() {
            out = out.lutz_shift(t, l + 1, c)?;
        }
        Ok(out)
    }

    /// `e_λ - e_{λ+1} = 0` in `H_1(Y_λ) = H_1(Σ)/(L_λ + L_{λ+1})` for each λ.
    pub fn admissibility_failures(&self, t: &Trisection) -> Vec<usize> {
        (0..3)
            .filter(|&l| {
                let n = next(l);
                let lift = |i: usize| t.handlebody(i).lift(&self.euler[i]);
                let diff: Vec<BigInt> = lift(l).iter().zip(lift(n)).map(|(x, y)| x - y).collect();
                !t.sector(l).is_zero_class(&diff)
            })
            .map(|l| l + 1)
            .collect()
    }

    pub fn is_admissible(&self, t: &Trisection) -> bool {
        self.admissibility_failures(t).is_empty()
    }

    fn twist_rep(&self, t: &Trisection) -> H2DualRep {
        H2DualRep::from_classes(t, &self.twists)
    }

    /// `c_1` relative to the base: twice the class dual to the accumulated
    /// twists. Fails when the twists were not applied as a cycle.
    pub fn c1_offset(&self, t: &Trisection) -> Result<OneOneCocycle> {
        let rep = self.twist_rep(t);
        rep.check(t)?;
        Ok(cocycle_from_dual_rep(t, &rep)?.scale(&BigInt::from(2)))
    }
}

/// `c_1(s1) - c_1(s2)` as a cocycle, defined up to coboundary.
pub fn c1_difference(t: &Trisection, s1: &SpinCLedger, s2: &SpinCLedger) -> Result<OneOneCocycle> {
    if s1.base_id != s2.base_id {
        return Err(Error::BaseMismatch { left: s1.base_id.clone(), right: s2.base_id.clone() });
    }
    let rep = s1.twist_rep(t).sub(&s2.twist_rep(t));
    rep.check(t)?;
    Ok(cocycle_from_dual_rep(t, &rep)?.scale(&BigInt::from(2)))
}
