use crate::alphabet::Symbol;
use crate::construct::linear::{linear_lift, splice};
use crate::construct::plan::ConstructionPlan;
use crate::construct::position::cross_join_position;
use crate::cycle::{Cycle, Index};
use crate::error::Result;

/// Builds the order-`n` De Bruijn cycle described by `plan`, oriented at `0_n`.
pub fn algorithm_aa(plan: &ConstructionPlan) -> Result<Cycle> {
    let alphabet = plan.alphabet();
    let mut gamma = plan.start_cycle();
    for t in 0..plan.levels() {
        let order = plan.base_order() + t + 1;
        let beta = plan.betas()[t];
        let join = plan.join(t);
        let g = alphabet.mul(beta, join.lambda);
        let pos = if t > 0 {
            let prev = plan.join(t - 1);
            cross_join_position(alphabet, order - 2, prev.i, prev.lambda, g)?.get()
        } else if plan.base().is_none() {
            // [1, 2, ..., q-1, 0]: the symbol g sits at position g
            g as usize
        } else {
            gamma.index_of(&vec![g; order - 1])?.get()
        };
        let lifted = linear_lift(alphabet, gamma.symbols(), beta, 0);
        let joined = splice(alphabet, &lifted, join.i, join.lambda, pos + 1);
        gamma = Cycle::from_vec(joined).oriented(order)?;
    }
    Ok(gamma)
}

/// Positions of the constant words `g^n`, `g != 0`, in the output of `plan`,
/// as predicted by [`cross_join_position`]. Empty when the plan has no levels.
pub fn constant_positions(plan: &ConstructionPlan) -> Result<Vec<(Symbol, Index)>> {
    let Some(last) = plan.levels().checked_sub(1) else {
        return Ok(Vec::new());
    };
    let alphabet = plan.alphabet();
    let join = plan.join(last);
    (1..alphabet.size() as Symbol)
        .map(|g| Ok((g, cross_join_position(alphabet, plan.n() - 1, join.i, join.lambda, g)?)))
        .collect()
}
