use std::fmt;

use super::{Monomial, MonomialOrder};

/// Pure difference binomial `lead - trail` with `lead > trail` in the order
/// it was built for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    pub lead: Monomial,
    pub trail: Monomial,
}

impl Binomial {
    /// Orients `a - b` (up to sign); `None` when `a == b`.
    pub fn new(a: Monomial, b: Monomial, order: MonomialOrder) -> Option<Self> {
        match order.cmp(&a, &b) {
            std::cmp::Ordering::Greater => Some(Binomial { lead: a, trail: b }),
            std::cmp::Ordering::Less => Some(Binomial { lead: b, trail: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.lead.degree().max(self.trail.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.lead.degree() == self.trail.degree()
    }

    /// S-polynomial; `None` when it vanishes.
    pub fn s_poly(&self, other: &Binomial, order: MonomialOrder) -> Option<Binomial> {
        let l = self.lead.lcm(&other.lead);
        let a = l.replace(&self.lead, &self.trail);
        let b = l.replace(&other.lead, &other.trail);
        Binomial::new(a, b, order)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.trail)
    }
}
