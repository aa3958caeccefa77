//! Expectations of free stochastic measures `St_π` and product measures `Pr_π`.
//!
//! A process is described by its free cumulants per unit time and the size
//! `t = |A|` of the set it is evaluated on ([`ProcessModel`]). Expectations are
//! exact rationals. The finite-`N` sums that define the measures are available
//! as Laurent polynomials in `N` ([`finite_n_laurent`]) and serve as the
//! independent check on every limit formula here.

mod finite;
mod ito;
mod laurent;
mod product;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::limits;
use crate::ncsum::NoncrossingSum;
use crate::num::Rational;
use crate::partitions::{mobius_interval, noncrossing_coarsenings, Lattice, SetPartition};
use crate::transforms::{CumulantSeq, MomentSeq};

pub use finite::{finite_n_expectation, finite_n_laurent, vanishing_order, vanishing_order_check, VanishingOrder};
pub use ito::{
    ito_expand, ito_expectation, ito_mobius_expand, ito_mobius_expand_in, ito_mobius_expectation,
    MobiusExpansion,
};
pub use laurent::{LaurentInN, Limit};
pub use product::{
    brownian_product_measure, poisson_product_check, poisson_product_measure, poisson_separation_predicate, BrownianProduct,
    PoissonProduct,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProcessKind {
    /// Free Brownian motion: `r_2 = t`, all other cumulants zero.
    Semicircular,
    /// Free Poisson: every cumulant equals `t`.
    FreePoisson,
    /// Free compound Poisson with the given generator moments: `r_n = t m_n(e)`.
    CompoundPoisson(MomentSeq),
    /// Arbitrary per-unit-time cumulants: `r_n = t base_n`.
    Custom(CumulantSeq),
}

/// A stationary process with free increments, evaluated on a set of size `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProcessModel {
    kind: ProcessKind,
    t: Rational,
    centered: bool,
}

impl ProcessModel {
    pub fn new(kind: ProcessKind, t: Rational) -> Result<Self> {
        if crate::num::is_negative(&t) {
            return Err(Error::InvalidArgument("time parameter t must be non-negative".into()));
        }
        Ok(ProcessModel { kind, t, centered: false })
    }

    pub fn semicircular(t: Rational) -> Result<Self> {
        Self::new(ProcessKind::Semicircular, t)
    }

    pub fn free_poisson(t: Rational) -> Result<Self> {
        Self::new(ProcessKind::FreePoisson, t)
    }

    pub fn compound_poisson(generator: MomentSeq, t: Rational) -> Result<Self> {
        Self::new(ProcessKind::CompoundPoisson(generator), t)
    }

    pub fn custom(base: CumulantSeq, t: Rational) -> Result<Self> {
        Self::new(ProcessKind::Custom(base), t)
    }

    /// The compensated process `X - φ(X)`.
    pub fn centered(mut self) -> Self {
        self.centered = true;
        self
    }

    pub fn kind(&self) -> &ProcessKind {
        &self.kind
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn is_centered(&self) -> bool {
        self.centered
    }

    /// `r_n(X_A)`. Errors when a compound or custom model is asked beyond its
    /// stored truncation.
    pub fn cumulant_at(&self, n: usize) -> Result<Rational> {
        if n == 0 {
            return Err(Error::InvalidArgument("cumulants are indexed from 1".into()));
        }
        if n == 1 && self.centered {
            return Ok(Rational::zero());
        }
        let unit = match &self.kind {
            ProcessKind::Semicircular => {
                if n == 2 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }
            ProcessKind::FreePoisson => Rational::one(),
            ProcessKind::CompoundPoisson(m) => m.get(n)?,
            ProcessKind::Custom(r) => r.get(n)?,
        };
        Ok(unit * &self.t)
    }

    /// `φ(X) = r_1`.
    pub fn expectation(&self) -> Result<Rational> {
        self.cumulant_at(1)
    }

    pub fn cumulants(&self, order: usize) -> Result<CumulantSeq> {
        Ok(CumulantSeq::new((1..=order).map(|n| self.cumulant_at(n)).collect::<Result<_>>()?))
    }

    /// Largest `n` for which `cumulant_at(n)` succeeds, if finite.
    pub fn available_order(&self) -> Option<usize> {
        match &self.kind {
            ProcessKind::CompoundPoisson(m) => Some(m.order()),
            ProcessKind::Custom(r) => Some(r.order()),
            _ => None,
        }
    }

    /// The same process with `t` replaced.
    pub fn with_time(&self, t: Rational) -> Result<Self> {
        let mut out = Self::new(self.kind.clone(), t)?;
        out.centered = self.centered;
        Ok(out)
    }

    /// `κ[0..=max]` with `κ[k] = r_k`, ready for noncrossing sums.
    pub(crate) fn weights(&self, max: usize) -> Result<Vec<Rational>> {
        let mut w = Vec::with_capacity(max + 1);
        w.push(Rational::zero());
        for k in 1..=max {
            w.push(self.cumulant_at(k)?);
        }
        Ok(w)
    }
}

/// `φ(St_π)`: `R_π(X)` for noncrossing `π`, zero for crossing `π`.
pub fn st_expectation(pi: &SetPartition, process: &ProcessModel) -> Result<Rational> {
    if !pi.is_noncrossing() {
        return Ok(Rational::zero());
    }
    let mut acc = Rational::one();
    for size in pi.block_sizes() {
        acc *= process.cumulant_at(size)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// `φ(Pr_π) = Σ_{σ ∈ NC, σ ≥ π} φ(St_σ)`. Crossing `π` are accepted; their
/// crossing coarsenings contribute nothing.
pub fn pr_expectation(pi: &SetPartition, process: &ProcessModel) -> Result<Rational> {
    let mut total = Rational::zero();
    for sigma in noncrossing_coarsenings(pi)? {
        total += st_expectation(&sigma, process)?;
    }
    Ok(total)
}

/// A finite signed sum `Σ c_σ M_σ` of partition-indexed measures.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Combination {
    terms: BTreeMap<SetPartition, Rational>,
}

impl Combination {
    pub fn add(&mut self, coeff: Rational, pi: SetPartition) {
        let slot = self.terms.entry(pi.clone()).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&pi);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SetPartition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, pi: &SetPartition) -> Rational {
        self.terms.get(pi).cloned().unwrap_or_else(Rational::zero)
    }

    /// Replaces each partition by the combination `expand` gives for it.
    pub fn substitute(&self, mut expand: impl FnMut(&SetPartition) -> Result<Combination>) -> Result<Combination> {
        let mut out = Combination::default();
        for (pi, c) in &self.terms {
            for (sigma, d) in expand(pi)?.terms {
                out.add(c * d, sigma);
            }
        }
        Ok(out)
    }

    pub fn evaluate(&self, mut value: impl FnMut(&SetPartition) -> Result<Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (pi, c) in &self.terms {
            total += c * value(pi)?;
        }
        Ok(total)
    }
}

/// `Pr_π = Σ_{σ ∈ NC, σ ≥ π} St_σ`.
pub fn pr_from_st(pi: &SetPartition) -> Result<Combination> {
    let mut out = Combination::default();
    for sigma in noncrossing_coarsenings(pi)? {
        out.add(Rational::one(), sigma);
    }
    Ok(out)
}

/// `St_π = Σ_{σ ∈ NC, σ ≥ π} μ_NC(π, σ) Pr_σ` for noncrossing `π`.
pub fn st_from_pr(pi: &SetPartition) -> Result<Combination> {
    let mut out = Combination::default();
    for (sigma, mu) in mobius_interval(pi, &SetPartition::full(pi.n()), Lattice::NonCrossing)? {
        out.add(mu, sigma);
    }
    Ok(out)
}

/// Compares `φ(St_π)` with `Π_{B ∈ π} φ(Δ_{|B|})`.
pub fn multiplicativity_check(pi: &SetPartition, process: &ProcessModel) -> Result<bool> {
    if !pi.is_noncrossing() {
        return Err(Error::Crossing);
    }
    let mut rhs = Rational::one();
    for size in pi.block_sizes() {
        rhs *= diagonal_cumulant(1, size, process)?;
    }
    Ok(st_expectation(pi, process)? == rhs)
}

/// `r_n(Δ_k) = r_{nk}(X)`.
pub fn diagonal_cumulant(n: usize, k: usize, process: &ProcessModel) -> Result<Rational> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidArgument("diagonal cumulants need n, k ≥ 1".into()));
    }
    process.cumulant_at(n * k)
}

/// The diagonal measure `Δ_k` as a process in its own right, where the
/// model family admits a closed form: the free Poisson process is its own
/// diagonal measure, and a compound Poisson process with generator `e` has
/// diagonal measures with generators `e^k`.
pub fn diagonal_process(k: usize, process: &ProcessModel) -> Result<Option<ProcessModel>> {
    if k == 0 {
        return Err(Error::InvalidArgument("diagonal index must be at least 1".into()));
    }
    if process.centered && k > 1 {
        return Ok(None);
    }
    let out = match &process.kind {
        ProcessKind::FreePoisson => Some(process.clone()),
        ProcessKind::CompoundPoisson(m) => {
            // m_j(e^k) = m_{jk}(e)
            let order = m.order() / k;
            let moments = (1..=order).map(|j| m.get(j * k)).collect::<Result<Vec<_>>>()?;
            Some(ProcessModel::compound_poisson(MomentSeq::new(moments), process.t.clone())?)
        }
        _ => None,
    };
    Ok(out)
}

/// Evaluates `φ(Δ_{k_1} ⋯ Δ_{k_n})` for many words against one process,
/// sharing work between words.
#[derive(Clone, Debug)]
pub struct WordMoments {
    sum: NoncrossingSum,
}

impl WordMoments {
    /// Supports words of total degree up to `max_degree`.
    pub fn new(process: &ProcessModel, max_degree: usize) -> Result<Self> {
        Ok(WordMoments { sum: NoncrossingSum::new(process.weights(max_degree)?) })
    }

    pub fn max_degree(&self) -> usize {
        self.sum.max_weight()
    }

    pub fn moment(&mut self, word: &[usize]) -> Result<Rational> {
        limits::check("delta_word_moment", word.len(), limits::NONCROSSING_CAP)?;
        if word.contains(&0) {
            return Err(Error::InvalidArgument("diagonal indices must be positive".into()));
        }
        self.sum.eval(word)
    }
}

/// `φ(Δ_{k_1} Δ_{k_2} ⋯ Δ_{k_n}) = Σ_{π ∈ NC(n)} Π_{B ∈ π} r_{Σ_{j ∈ B} k_j}(X)`.
pub fn delta_word_moment(word: &[usize], process: &ProcessModel) -> Result<Rational> {
    WordMoments::new(process, word.iter().sum())?.moment(word)
}

/// `φ(St_π)` for a centered process and noncrossing `π`. When `π` has an
/// inner singleton the value is zero.
pub fn inner_singleton_vanishing(pi: &SetPartition, process: &ProcessModel) -> Result<Rational> {
    if !process.centered {
        return Err(Error::NotCentered);
    }
    let inner = pi.has_inner_singleton()?;
    let value = st_expectation(pi, process)?;
    debug_assert!(!inner || value.is_zero());
    Ok(value)
}

/// `lim Σ_i X_i^{m_1} Z_1 X_i^{m_2} ⋯ Z_k X_i^{m_{k+1}} = (Π_j φ(Z_j)) Δ_{Σ m_j}`
/// for `Z_j` free from the process.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichLimit {
    pub coefficient: Rational,
    pub diagonal: usize,
}

impl SandwichLimit {
    pub fn expectation(&self, process: &ProcessModel) -> Result<Rational> {
        if self.coefficient.is_zero() {
            return Ok(Rational::zero());
        }
        Ok(&self.coefficient * diagonal_cumulant(1, self.diagonal, process)?)
    }
}

pub fn sandwich_limit(powers: &[usize], z_expectations: &[Rational]) -> Result<SandwichLimit> {
    if powers.len() != z_expectations.len() + 1 {
        return Err(Error::InvalidArgument(alloc::format!(
            "{} inserted elements need {} powers, got {}",
            z_expectations.len(),
            z_expectations.len() + 1,
            powers.len()
        )));
    }
    if powers.contains(&0) {
        return Err(Error::InvalidArgument("powers must be positive".into()));
    }
    Ok(SandwichLimit {
        coefficient: z_expectations.iter().product(),
        diagonal: powers.iter().sum(),
    })
}
