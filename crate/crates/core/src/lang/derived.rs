//! Derived combinators: controlled gates and permutations of `n·1`.

use super::{Prim, Term};
use crate::error::{Error, Result};

/// `ctrl c = dist ; (id + (id * c)) ; factor`, typed at `(1+1)×b`.
pub fn ctrl(c: &Term) -> Term {
    Term::seq_all([
        Prim::Dist.into(),
        Term::sum(Prim::Id, Term::prod(Prim::Id, c.clone())),
        Prim::Factor.into(),
    ])
}

pub fn gate_x() -> Term {
    Prim::SwapPlus.into()
}

pub fn gate_h() -> Term {
    Prim::Had.into()
}

pub fn gate_cx() -> Term {
    ctrl(&gate_x())
}

pub fn gate_ch() -> Term {
    ctrl(&gate_h())
}

pub fn gate_ccx() -> Term {
    ctrl(&gate_cx())
}

/// `c^m` as the right-nested `c ; (c ; … )`; `id` for `m = 0`.
pub fn iterate(c: &Term, m: usize) -> Term {
    match m {
        0 => Term::id(),
        1 => c.clone(),
        _ => Term::seq(c.clone(), iterate(c, m - 1)),
    }
}

fn pad(mut t: Term, from: usize, to: usize) -> Term {
    for _ in from..to {
        t = Term::sum(t, Prim::Id);
    }
    t
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Index(msg()))
    }
}

/// Exchanges positions `k` and `k+1` of `n·1` (see [`ValueType::ones`]).
pub fn adjacent_swap(k: usize, n: usize) -> Result<Term> {
    check(k >= 1 && k < n, || {
        format!("adjacent swap ({k} {}) outside 1..={n}", k + 1)
    })?;
    // On (k+1)·1 = ((k-1)·1 + 1) + 1 the last two summands are exchanged.
    let core = if k == 1 {
        Prim::SwapPlus.into()
    } else {
        Term::seq_all([
            Prim::AssocrPlus.into(),
            Term::sum(Prim::Id, Prim::SwapPlus),
            Prim::AssoclPlus.into(),
        ])
    };
    Ok(pad(core, k + 1, n))
}

/// Exchanges positions `k` and `n` of `n·1`.
pub fn swap_plus_to_end(k: usize, n: usize) -> Result<Term> {
    check(k >= 1 && k <= n, || format!("position {k} outside 1..={n}"))?;
    if k == n {
        return Ok(Term::id());
    }
    if k + 1 == n {
        return adjacent_swap(k, n);
    }
    let adj = adjacent_swap(k, n)?;
    Ok(Term::seq_all([
        adj.clone(),
        swap_plus_to_end(k + 1, n)?,
        adj,
    ]))
}

/// Exchanges positions `j` and `k` of `n·1`; `id` when `j = k`.
pub fn swap_plus_at(j: usize, k: usize, n: usize) -> Result<Term> {
    check(j >= 1 && k >= 1 && j <= n && k <= n, || {
        format!("transposition ({j} {k}) outside 1..={n}")
    })?;
    let (j, k) = (j.min(k), j.max(k));
    if j == k {
        return Ok(Term::id());
    }
    if k == n {
        return swap_plus_to_end(j, n);
    }
    let outer = swap_plus_to_end(k, n)?;
    Ok(Term::seq_all([
        outer.clone(),
        swap_plus_to_end(j, n)?,
        outer,
    ]))
}
