use std::fmt;

use serde::{Deserialize, Serialize};

/// A boolean combination of named atoms.
///
/// Values are kept in canonical form: double negations are eliminated at
/// construction and on deserialization, so structural equality is the
/// equality the engine uses everywhere.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", from = "RawProposition")]
pub enum Proposition {
    Atom(String),
    Not(Box<Proposition>),
    And(Box<Proposition>, Box<Proposition>),
    Or(Box<Proposition>, Box<Proposition>),
    Implies(Box<Proposition>, Box<Proposition>),
}

impl Proposition {
    pub fn atom(name: impl Into<String>) -> Self {
        Proposition::Atom(name.into())
    }

    /// Negation; `not(not(p))` is `p`.
    #[allow(clippy::should_implement_trait)]
    pub fn not(p: Proposition) -> Self {
        match p {
            Proposition::Not(inner) => *inner,
            other => Proposition::Not(Box::new(other)),
        }
    }

    pub fn and(p: Proposition, q: Proposition) -> Self {
        Proposition::And(Box::new(p), Box::new(q))
    }

    pub fn or(p: Proposition, q: Proposition) -> Self {
        Proposition::Or(Box::new(p), Box::new(q))
    }

    pub fn implies(p: Proposition, q: Proposition) -> Self {
        Proposition::Implies(Box::new(p), Box::new(q))
    }

    pub fn negated(&self) -> Proposition {
        Proposition::not(self.clone())
    }

    /// Rebuilds the proposition bottom-up through the canonicalizing constructors.
    pub fn canonical(self) -> Proposition {
        match self {
            Proposition::Atom(_) => self,
            Proposition::Not(p) => Proposition::not(p.canonical()),
            Proposition::And(p, q) => Proposition::and(p.canonical(), q.canonical()),
            Proposition::Or(p, q) => Proposition::or(p.canonical(), q.canonical()),
            Proposition::Implies(p, q) => Proposition::implies(p.canonical(), q.canonical()),
        }
    }

    /// Immediate sub-propositions.
    pub fn children(&self) -> Vec<&Proposition> {
        match self {
            Proposition::Atom(_) => vec![],
            Proposition::Not(p) => vec![p],
            Proposition::And(p, q) | Proposition::Or(p, q) | Proposition::Implies(p, q) => {
                vec![p, q]
            }
        }
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Proposition::Atom(name) => f.write_str(name),
            Proposition::Not(p) => write!(f, "¬{p}"),
            Proposition::And(p, q) => write!(f, "({p} ∧ {q})"),
            Proposition::Or(p, q) => write!(f, "({p} ∨ {q})"),
            Proposition::Implies(p, q) => write!(f, "({p} ⊃ {q})"),
        }
    }
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum RawProposition {
    Atom(String),
    Not(Box<RawProposition>),
    And(Box<RawProposition>, Box<RawProposition>),
    Or(Box<RawProposition>, Box<RawProposition>),
    Implies(Box<RawProposition>, Box<RawProposition>),
}

impl From<RawProposition> for Proposition {
    fn from(raw: RawProposition) -> Self {
        match raw {
            RawProposition::Atom(name) => Proposition::Atom(name),
            RawProposition::Not(p) => Proposition::not((*p).into()),
            RawProposition::And(p, q) => Proposition::and((*p).into(), (*q).into()),
            RawProposition::Or(p, q) => Proposition::or((*p).into(), (*q).into()),
            RawProposition::Implies(p, q) => Proposition::implies((*p).into(), (*q).into()),
        }
    }
}
