use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
    /// Block order eliminating the first `k` variables of the permuted
    /// sequence: degrevlex on the first block, ties broken by degrevlex on
    /// the rest.
    Elimination(usize),
}

/// A monomial order together with a variable permutation.
///
/// `perm[0]` is the index of the most significant variable, `perm[n-1]` the
/// least significant one. The identity permutation gives
/// `X_0 > X_1 > ... > X_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    kind: OrderKind,
    perm: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, perm: Vec<usize>) -> Self {
        let mut seen = vec![false; perm.len()];
        for &i in &perm {
            assert!(i < perm.len() && !seen[i], "not a permutation: {perm:?}");
            seen[i] = true;
        }
        if let OrderKind::Elimination(k) = kind {
            assert!(k <= perm.len());
        }
        MonomialOrder { kind, perm }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Self::new(OrderKind::DegRevLex, (0..nvars).collect())
    }

    pub fn deglex(nvars: usize) -> Self {
        Self::new(OrderKind::DegLex, (0..nvars).collect())
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, (0..nvars).collect())
    }

    /// Degrevlex with `X_last` moved to the least significant position.
    pub fn degrevlex_with_last(nvars: usize, last: usize) -> Self {
        let mut perm: Vec<usize> = (0..nvars).filter(|&i| i != last).collect();
        perm.push(last);
        Self::new(OrderKind::DegRevLex, perm)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.perm.len()
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::Lex => self.lex_cmp(ea, eb, &self.perm),
            OrderKind::DegLex => a.degree().cmp(&b.degree()).then_with(|| self.lex_cmp(ea, eb, &self.perm)),
            OrderKind::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| revlex(ea, eb, &self.perm)),
            OrderKind::Elimination(k) => {
                let (first, rest) = self.perm.split_at(k);
                block_degrevlex(ea, eb, first).then_with(|| block_degrevlex(ea, eb, rest))
            }
        }
    }

    fn lex_cmp(&self, ea: &[u16], eb: &[u16], perm: &[usize]) -> Ordering {
        for &i in perm {
            match ea[i].cmp(&eb[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

fn block_degrevlex(ea: &[u16], eb: &[u16], block: &[usize]) -> Ordering {
    let da: u32 = block.iter().map(|&i| ea[i] as u32).sum();
    let db: u32 = block.iter().map(|&i| eb[i] as u32).sum();
    da.cmp(&db).then_with(|| revlex(ea, eb, block))
}

/// Reverse-lex tiebreak: the monomial with the smaller exponent in the last
/// differing variable is larger.
fn revlex(ea: &[u16], eb: &[u16], perm: &[usize]) -> Ordering {
    for &i in perm.iter().rev() {
        match ea[i].cmp(&eb[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_textbook() {
        let o = MonomialOrder::degrevlex(3);
        // x^2 z < x y^2 in degrevlex (last variable decides)
        assert_eq!(o.cmp(&m(&[2, 0, 1]), &m(&[1, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn deglex_vs_degrevlex() {
        let a = m(&[1, 0, 2]);
        let b = m(&[0, 2, 1]);
        assert_eq!(MonomialOrder::deglex(3).cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::degrevlex(3).cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn last_variable_permutation() {
        let o = MonomialOrder::degrevlex_with_last(3, 0);
        // with X0 last, any monomial containing X0 loses ties
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 1, 1])), Ordering::Less);
    }

    #[test]
    fn elimination_block() {
        let o = MonomialOrder::new(OrderKind::Elimination(1), vec![0, 1, 2]);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }
}
