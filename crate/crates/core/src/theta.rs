//! Theta characteristics of the Hessian quartic of a Cayley octad, modeled
//! by even subsets of the labels `{1..8}` modulo the full set.
//!
//! The characteristic of an even subset `X` is `θ_X = θ0 + v_X`, where `θ0`
//! is the distinguished even characteristic of the net and `K = 2 θ0`.
//! Pairs `{i, j}` give the 28 odd characteristics `θ_ij`, quadruples the 35
//! even ones other than `θ0`. Divisor-class sums are tracked by
//! [`ThetaSum`], which keeps the multiple of `θ0` separately so that only
//! sums with coefficient one are characteristics.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThetaError {
    #[error("label {0} is outside 1..8")]
    BadLabel(usize),
    #[error("label {0} is repeated")]
    RepeatedLabel(usize),
    #[error("a subset of odd size does not define a characteristic")]
    OddSubset,
    #[error("the sum is {0} times θ0 plus an offset, not a characteristic")]
    NotACharacteristic(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

/// An element of the model, stored as a bit mask over labels 1..7 (label 8
/// is cleared by complementing).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaChar(u8);

const ALL: u8 = 0xff;

fn canonical(mask: u8) -> u8 {
    if mask & 0x80 != 0 {
        !mask
    } else {
        mask
    }
}

fn mask_of(labels: &[usize]) -> Result<u8, ThetaError> {
    let mut mask = 0u8;
    for &l in labels {
        if !(1..=8).contains(&l) {
            return Err(ThetaError::BadLabel(l));
        }
        let bit = 1 << (l - 1);
        if mask & bit != 0 {
            return Err(ThetaError::RepeatedLabel(l));
        }
        mask |= bit;
    }
    Ok(mask)
}

impl ThetaChar {
    pub fn theta0() -> Self {
        ThetaChar(0)
    }

    /// `θ_ij`.
    pub fn pair(i: usize, j: usize) -> Result<Self, ThetaError> {
        Self::from_subset(&[i, j])
    }

    /// `θ_X` for an even subset `X` of the labels.
    pub fn from_subset(labels: &[usize]) -> Result<Self, ThetaError> {
        let mask = mask_of(labels)?;
        if mask.count_ones() % 2 == 1 {
            return Err(ThetaError::OddSubset);
        }
        Ok(ThetaChar(canonical(mask)))
    }

    /// The bit mask of the canonical subset (labels 1..7 only).
    pub fn offset(self) -> u8 {
        self.0
    }

    /// Half the weight of a minimal representative, mod 2.
    pub fn parity(self) -> Parity {
        let w = self.0.count_ones().min((ALL ^ self.0).count_ones());
        if (w / 2).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self.parity() == Parity::Odd
    }

    /// Smallest subset representing the class; for quadruples, the one
    /// containing label 1.
    pub fn support(self) -> Vec<usize> {
        let small = if self.0.count_ones() <= 4 { self.0 } else { ALL ^ self.0 };
        let small = if small.count_ones() == 4 && small & 1 == 0 { ALL ^ small } else { small };
        (1..=8).filter(|l| small & (1 << (l - 1)) != 0).collect()
    }
}

impl fmt::Display for ThetaChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.support();
        if s.is_empty() {
            f.write_str("theta0")
        } else {
            let digits: String = s.iter().map(|l| l.to_string()).collect();
            write!(f, "theta{digits}")
        }
    }
}

/// `n θ0 + v` in the divisor-class group, with `K = 2 θ0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThetaSum {
    pub theta0: i64,
    pub offset: u8,
}

impl ThetaSum {
    pub fn canonical_class() -> Self {
        ThetaSum { theta0: 2, offset: 0 }
    }

    pub fn characteristic(self) -> Result<ThetaChar, ThetaError> {
        if self.theta0 == 1 {
            Ok(ThetaChar(self.offset))
        } else {
            Err(ThetaError::NotACharacteristic(self.theta0))
        }
    }
}

impl From<ThetaChar> for ThetaSum {
    fn from(t: ThetaChar) -> Self {
        ThetaSum { theta0: 1, offset: t.0 }
    }
}

impl Add for ThetaSum {
    type Output = ThetaSum;
    fn add(self, o: ThetaSum) -> ThetaSum {
        ThetaSum { theta0: self.theta0 + o.theta0, offset: canonical(self.offset ^ o.offset) }
    }
}

impl Neg for ThetaSum {
    type Output = ThetaSum;
    fn neg(self) -> ThetaSum {
        ThetaSum { theta0: -self.theta0, offset: self.offset }
    }
}

impl Sub for ThetaSum {
    type Output = ThetaSum;
    fn sub(self, o: ThetaSum) -> ThetaSum {
        self + (-o)
    }
}

impl Mul<ThetaSum> for i64 {
    type Output = ThetaSum;
    fn mul(self, t: ThetaSum) -> ThetaSum {
        let offset = if self % 2 == 0 { 0 } else { t.offset };
        ThetaSum { theta0: self * t.theta0, offset }
    }
}

/// All 64 elements, ordered by offset.
pub fn build_model() -> Vec<ThetaChar> {
    (0u8..128).filter(|m| m.count_ones() % 2 == 0).map(ThetaChar).collect()
}

/// The 28 odd characteristics in the order (1,2), (1,3), .., (7,8).
pub fn odd_characteristics() -> Vec<ThetaChar> {
    (1..=8).flat_map(|i| (i + 1..=8).map(move |j| ThetaChar::pair(i, j).unwrap())).collect()
}

/// `θa + θb + θc - K`.
pub fn triple_sum(a: ThetaChar, b: ThetaChar, c: ThetaChar) -> ThetaChar {
    (ThetaSum::from(a) + b.into() + c.into() - ThetaSum::canonical_class()).characteristic().expect("coefficient one")
}

/// `θ_{i,jkl} = θij + θik + θil - K`.
pub fn theta_ijkl(i: usize, j: usize, k: usize, l: usize) -> Result<ThetaChar, ThetaError> {
    mask_of(&[i, j, k, l])?;
    Ok(triple_sum(ThetaChar::pair(i, j)?, ThetaChar::pair(i, k)?, ThetaChar::pair(i, l)?))
}

/// `-3K + Σ_{i != r} θ_ri`.
pub fn even_from_heptad(r: usize) -> Result<ThetaChar, ThetaError> {
    mask_of(&[r])?;
    let mut sum = -3 * ThetaSum::canonical_class();
    for i in (1..=8).filter(|&i| i != r) {
        sum = sum + ThetaChar::pair(r, i)?.into();
    }
    sum.characteristic()
}

/// Even characteristic attached to the Cremona transformation centered at
/// the four labels.
pub fn cremona_label(center: [usize; 4]) -> Result<ThetaChar, ThetaError> {
    theta_ijkl(center[0], center[1], center[2], center[3])
}

/// Seven odd characteristics whose triple sums minus `K` are all even,
/// stored in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AronholdSystem(pub [ThetaChar; 7]);

impl AronholdSystem {
    pub fn is_valid(&self) -> bool {
        let s = &self.0;
        s.iter().all(|t| t.is_odd())
            && (0..7).all(|a| {
                (a + 1..7).all(|b| (b + 1..7).all(|c| !triple_sum(s[a], s[b], s[c]).is_odd()))
            })
    }

    /// `-3K + Σ ϑ`, the even characteristic the system determines.
    pub fn even_characteristic(&self) -> ThetaChar {
        let sum = self.0.iter().fold(-3 * ThetaSum::canonical_class(), |acc, t| acc + (*t).into());
        sum.characteristic().expect("seven terms")
    }

    /// Sorted label pairs.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = self
            .0
            .iter()
            .map(|t| {
                let s = t.support();
                (s[0], s[1])
            })
            .collect();
        pairs.sort();
        pairs
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    Count,
    List,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Enumeration {
    Count(usize),
    List(Vec<AronholdSystem>),
}

pub fn aronhold_enumerate(mode: EnumerationMode, parallel: bool) -> Enumeration {
    let systems = aronhold_systems(parallel);
    match mode {
        EnumerationMode::Count => Enumeration::Count(systems.len()),
        EnumerationMode::List => Enumeration::List(systems),
    }
}

/// All Aronhold systems, each listed once, sorted. The search extends partial systems only by characteristics
/// forming even triples with every pair already chosen.
pub fn aronhold_systems(parallel: bool) -> Vec<AronholdSystem> {
    let odd = odd_characteristics();
    let start = |first: usize| {
        let mut out = Vec::new();
        let mut chosen = vec![first];
        extend(&odd, &mut chosen, &mut out);
        out
    };
    let mut systems: Vec<AronholdSystem> = if parallel {
        (0..odd.len()).into_par_iter().flat_map_iter(start).collect()
    } else {
        (0..odd.len()).flat_map(start).collect()
    };
    systems.sort();
    systems
}

fn extend(odd: &[ThetaChar], chosen: &mut Vec<usize>, out: &mut Vec<AronholdSystem>) {
    if chosen.len() == 7 {
        let mut members: [ThetaChar; 7] = std::array::from_fn(|k| odd[chosen[k]]);
        members.sort();
        out.push(AronholdSystem(members));
        return;
    }
    let last = *chosen.last().expect("nonempty");
    let remaining = 7 - chosen.len();
    for c in last + 1..=odd.len() - remaining {
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(x, &a)| chosen[x + 1..].iter().all(|&b| !triple_sum(odd[a], odd[b], odd[c]).is_odd()));
        if ok {
            chosen.push(c);
            extend(odd, chosen, out);
            chosen.pop();
        }
    }
}

/// Number of systems mapping to each even characteristic.
pub fn even_histogram(systems: &[AronholdSystem]) -> BTreeMap<ThetaChar, usize> {
    let mut h = BTreeMap::new();
    for s in systems {
        *h.entry(s.even_characteristic()).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parities() {
        let model = build_model();
        assert_eq!(model.len(), 64);
        assert_eq!(model.iter().filter(|t| t.is_odd()).count(), 28);
        assert_eq!(ThetaChar::theta0().parity(), Parity::Even);
        assert!(ThetaChar::pair(3, 8).unwrap().is_odd());
        assert!(!ThetaChar::from_subset(&[1, 2, 3, 4]).unwrap().is_odd());
        assert_eq!(ThetaChar::from_subset(&[1, 2, 3]), Err(ThetaError::OddSubset));
    }

    #[test]
    fn labels() {
        assert_eq!(ThetaChar::theta0().to_string(), "theta0");
        assert_eq!(ThetaChar::pair(8, 2).unwrap().to_string(), "theta28");
        assert_eq!(ThetaChar::from_subset(&[5, 6, 7, 8]).unwrap().support(), vec![1, 2, 3, 4]);
        assert_eq!(ThetaChar::from_subset(&[1, 2, 3, 4, 5, 6]).unwrap().support(), vec![7, 8]);
    }

    #[test]
    fn sums_with_wrong_multiple_are_not_characteristics() {
        let t = ThetaChar::pair(1, 2).unwrap();
        let s = ThetaSum::from(t) + t.into();
        assert_eq!(s.characteristic(), Err(ThetaError::NotACharacteristic(2)));
    }
}
