use super::Monomial;

/// Monomial ideal given by a minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal, discarding non-minimal generators.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            nvars,
            generators: minimalize(gens),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            generators: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

/// Sorted minimal subset: no generator divides another.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}
