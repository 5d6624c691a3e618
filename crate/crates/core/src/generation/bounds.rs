//! Interval bounds on generation complexity, propagated through implications.
//!
//! Upper bounds come from known scenarios (a construction is an upper bound
//! on the cheapest construction). Lower bounds come from asserted seeds and
//! are pushed along implications: if `a ⊃ b` then generating `a` costs at
//! least as much as generating `b`. Each rule `a ⊃ b` is also applied in its
//! contrapositive form `¬b ⊃ ¬a`, which makes mutability inherit along rules.
//!
//! Compound propositions are linked to their parts:
//!
//! | proposition | upper              | lower                  | implied by / implies |
//! |-------------|--------------------|------------------------|----------------------|
//! | `x ∨ y`     | `min(up x, up y)`  | `min(low x, low y)`    | `x ⊃ x∨y`, `y ⊃ x∨y` |
//! | `x ∧ y`     | `up x + up y`      |                        | `x∧y ⊃ x`, `x∧y ⊃ y` |
//! | `x ⊃ y`     | as `¬x ∨ y`        | as `¬x ∨ y`            | as `¬x ∨ y`          |
//!
//! Values only move toward each other and are drawn from sums of finitely
//! many seeds, so the iteration reaches a fixed point.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::scenario::scenario_complexity;
use super::GenerationError;
use crate::bits::Bits;
use crate::knowledge::{BeliefBase, Proposition};

/// Slack for comparing bounds built from floating-point sums.
const EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bounds {
    pub lower: Bits,
    pub upper: Bits,
}

impl Bounds {
    pub const UNKNOWN: Bounds = Bounds {
        lower: Bits::ZERO,
        upper: Bits::INFINITY,
    };

    pub fn exact(bits: Bits) -> Self {
        Bounds {
            lower: bits,
            upper: bits,
        }
    }

    pub fn at_least(bits: Bits) -> Self {
        Bounds {
            lower: bits,
            upper: Bits::INFINITY,
        }
    }

    pub fn at_most(bits: Bits) -> Self {
        Bounds {
            lower: Bits::ZERO,
            upper: bits,
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.lower.value() <= self.upper.value() + EPSILON
    }
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds::UNKNOWN
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BoundsTable(BTreeMap<Proposition, Bounds>);

impl BoundsTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Bounds for `p`; `[0, +∞]` when nothing is known.
    pub fn get(&self, p: &Proposition) -> Bounds {
        self.0.get(p).copied().unwrap_or_default()
    }

    pub fn contains(&self, p: &Proposition) -> bool {
        self.0.contains_key(p)
    }

    /// Intersects the stored interval for `p` with `bounds`.
    pub fn tighten(&mut self, p: &Proposition, bounds: Bounds) {
        let entry = self.0.entry(p.clone()).or_default();
        entry.lower = entry.lower.max(bounds.lower);
        entry.upper = entry.upper.min(bounds.upper);
    }

    pub fn with(mut self, p: Proposition, bounds: Bounds) -> Self {
        self.tighten(&p, bounds);
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Proposition, &Bounds)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Point estimate of the generation complexity of `p`: the cheapest known
    /// route when there is one, otherwise the strongest floor implied by the
    /// rules, otherwise `+∞`.
    pub fn estimate(&self, p: &Proposition) -> Option<Bits> {
        let b = self.get(p);
        if b.upper.is_finite() {
            Some(b.upper)
        } else if b.lower > Bits::ZERO {
            Some(b.lower)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundViolation {
    pub target: Proposition,
    pub lower: Bits,
    pub upper: Bits,
}

#[derive(Debug, Clone, Copy)]
enum Link {
    /// `from ⊃ to`
    Implies { from: usize, to: usize },
    /// `whole = left ∨ right`
    Or { whole: usize, left: usize, right: usize },
    /// `whole = left ∧ right`
    And { whole: usize, left: usize, right: usize },
}

struct Network {
    props: Vec<Proposition>,
    index: BTreeMap<Proposition, usize>,
    links: Vec<Link>,
}

impl Network {
    fn build(kb: &BeliefBase, seeds: &BoundsTable) -> Self {
        let mut roots: BTreeSet<Proposition> = BTreeSet::new();
        roots.extend(seeds.iter().map(|(p, _)| p.clone()));
        roots.extend(kb.asserted_bounds().iter().map(|(p, _)| p.clone()));
        roots.extend(kb.scenarios().map(|(p, _)| p.clone()));
        for rule in kb.rules() {
            for side in [&rule.antecedent, &rule.consequent] {
                roots.insert(side.clone());
                roots.insert(side.negated());
            }
        }

        let mut net = Network {
            props: Vec::new(),
            index: BTreeMap::new(),
            links: Vec::new(),
        };
        for p in &roots {
            net.intern(p);
        }
        for rule in kb.rules() {
            let a = net.index[&rule.antecedent];
            let b = net.index[&rule.consequent];
            let not_a = net.index[&rule.antecedent.negated()];
            let not_b = net.index[&rule.consequent.negated()];
            net.links.push(Link::Implies { from: a, to: b });
            net.links.push(Link::Implies { from: not_b, to: not_a });
        }
        net
    }

    /// Adds `p` and everything it structurally depends on.
    fn intern(&mut self, p: &Proposition) -> usize {
        if let Some(&i) = self.index.get(p) {
            return i;
        }
        let i = self.props.len();
        self.props.push(p.clone());
        self.index.insert(p.clone(), i);
        match p {
            Proposition::Or(x, y) => {
                let (left, right) = (self.intern(x), self.intern(y));
                self.push_or(i, left, right);
            }
            Proposition::Implies(x, y) => {
                let (left, right) = (self.intern(&x.negated()), self.intern(y));
                self.push_or(i, left, right);
            }
            Proposition::And(x, y) => {
                let (left, right) = (self.intern(x), self.intern(y));
                self.links.push(Link::And { whole: i, left, right });
                self.links.push(Link::Implies { from: i, to: left });
                self.links.push(Link::Implies { from: i, to: right });
            }
            Proposition::Not(x) => {
                self.intern(x);
            }
            Proposition::Atom(_) => {}
        }
        i
    }

    fn push_or(&mut self, whole: usize, left: usize, right: usize) {
        self.links.push(Link::Or { whole, left, right });
        self.links.push(Link::Implies { from: left, to: whole });
        self.links.push(Link::Implies { from: right, to: whole });
    }
}

/// Runs propagation to its fixed point and returns the table together with
/// every entry whose lower bound ended up above its upper bound.
pub(crate) fn fixpoint(kb: &BeliefBase, seeds: &BoundsTable) -> (BoundsTable, Vec<BoundViolation>) {
    let net = Network::build(kb, seeds);
    let mut lower: Vec<Bits> = vec![Bits::ZERO; net.props.len()];
    let mut upper: Vec<Bits> = net.props.iter().map(|p| scenario_complexity(kb, p)).collect();
    for (p, b) in seeds.iter().chain(kb.asserted_bounds().iter()) {
        let i = net.index[p];
        lower[i] = lower[i].max(b.lower);
        upper[i] = upper[i].min(b.upper);
    }

    let mut changed = true;
    while changed {
        changed = false;
        let mut lift = |slot: &mut Bits, value: Bits| {
            if value.value() > slot.value() + EPSILON {
                *slot = value;
                changed = true;
            }
        };
        for link in &net.links {
            match *link {
                Link::Implies { from, to } => {
                    let l = lower[to];
                    lift(&mut lower[from], l);
                }
                Link::Or { whole, left, right } => {
                    let l = lower[left].min(lower[right]);
                    lift(&mut lower[whole], l);
                }
                Link::And { .. } => {}
            }
        }
        let mut drop = |slot: &mut Bits, value: Bits| {
            if value.value() < slot.value() - EPSILON {
                *slot = value;
                changed = true;
            }
        };
        for link in &net.links {
            match *link {
                Link::Implies { from, to } => {
                    let u = upper[from];
                    drop(&mut upper[to], u);
                }
                Link::Or { whole, left, right } => {
                    let u = upper[left].min(upper[right]);
                    drop(&mut upper[whole], u);
                }
                Link::And { whole, left, right } => {
                    let u = upper[left] + upper[right];
                    drop(&mut upper[whole], u);
                }
            }
        }
    }

    let mut table = BoundsTable::new();
    let mut violations = Vec::new();
    for (i, p) in net.props.iter().enumerate() {
        let b = Bounds {
            lower: lower[i],
            upper: upper[i],
        };
        if !b.is_consistent() {
            violations.push(BoundViolation {
                target: p.clone(),
                lower: b.lower,
                upper: b.upper,
            });
        }
        table.0.insert(p.clone(), b);
    }
    (table, violations)
}

/// Completes `seeds` (together with the bounds asserted in `kb`) into a
/// table over every proposition the belief base mentions. Upper bounds are
/// additionally seeded from [`scenario_complexity`].
///
/// Entries forced into `lower > upper` are reported, never repaired.
pub fn propagate_bounds(kb: &BeliefBase, seeds: &BoundsTable) -> Result<BoundsTable, GenerationError> {
    let (table, violations) = fixpoint(kb, seeds);
    if violations.is_empty() {
        Ok(table)
    } else {
        Err(GenerationError::InconsistentBounds(violations))
    }
}

/// Bounds under the reading that the cheapest known route to a proposition
/// *is* its generation complexity: every finite upper bound is also used as
/// a lower bound, and rules then lift the floors of what implies it.
///
/// Only asserted bounds can make this fail. Where the closed-world floors
/// alone would overshoot a known route, the floor is capped at the route.
///
/// `extra` lists propositions to include even if the belief base never
/// mentions them.
pub fn closed_world_bounds(kb: &BeliefBase, extra: &[Proposition]) -> Result<BoundsTable, GenerationError> {
    let seeds = extra
        .iter()
        .fold(BoundsTable::new(), |t, p| t.with(p.clone(), Bounds::UNKNOWN));
    let open = propagate_bounds(kb, &seeds)?;
    let closed = open.iter().fold(seeds, |t, (p, b)| {
        if b.upper.is_finite() {
            t.with(p.clone(), Bounds::at_least(b.upper))
        } else {
            t
        }
    });
    let (mut table, _) = fixpoint(kb, &closed);
    for b in table.0.values_mut() {
        b.lower = b.lower.min(b.upper);
    }
    Ok(table)
}
