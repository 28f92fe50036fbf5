use std::cmp::Ordering;

use crate::arith::{rank_compare, Poly, Var};

use super::chain::{RegularChain, Triangular};

/// Rank order on triangular sets: scanning variables upward, the first
/// difference decides; having a polynomial where the other has none, or a
/// smaller main degree, makes a set smaller. The empty set is placed below
/// every nonempty one.
pub fn chain_rank_compare(t: &impl Triangular, s: &impl Triangular) -> Ordering {
    let (a, b) = (t.polys(), s.polys());
    match (a.is_empty(), b.is_empty()) {
        (true, true) => return Ordering::Equal,
        (true, false) => return Ordering::Less,
        (false, true) => return Ordering::Greater,
        _ => {}
    }
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (Some(p), Some(q)) => {
                let (vp, dp) = p.rank().unwrap();
                let (vq, dq) = q.rank().unwrap();
                match vp.cmp(&vq) {
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Equal => match dp.cmp(&dq) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        o => return o,
                    },
                }
            }
        }
    }
}

/// A polynomial together with a regular chain; the input of the two
/// mutually recursive solver routines.
#[derive(Clone, Copy, Debug)]
pub struct Process<'a> {
    pub p: &'a Poly,
    pub t: &'a RegularChain,
}

impl<'a> Process<'a> {
    pub fn new(p: &'a Poly, t: &'a RegularChain) -> Self {
        Process { p, t }
    }

    /// Greatest variable appearing in `p` or `T`.
    pub fn greatest_var(&self) -> Option<Var> {
        self.p.mvar().max(self.t.top_var())
    }
}

/// Well-founded order on processes: greatest variable, then dimension, then
/// chain rank, then polynomial rank.
pub fn process_compare(a: &Process<'_>, b: &Process<'_>) -> Ordering {
    a.greatest_var()
        .cmp(&b.greatest_var())
        .then_with(|| a.t.dim().cmp(&b.t.dim()))
        .then_with(|| chain_rank_compare(a.t, b.t))
        .then_with(|| rank_compare(a.p, b.p))
}
