//! Minimum set cover over small index sets, with free singletons.

use crate::index_set::IndexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Choice {
    Set(usize),
    Singleton(usize),
}

/// Smallest list of members of `sets` (plus singletons when allowed) whose
/// union contains `target`, using at most `budget` picks.
///
/// Depth is deepened one pick at a time, so the first cover found is of
/// minimum size. Within a depth the lowest uncovered point is branched on,
/// larger sets first, ties in set order, the singleton last.
pub(crate) fn min_cover(
    target: IndexSet,
    sets: &[IndexSet],
    singletons: bool,
    budget: usize,
) -> Option<Vec<Choice>> {
    if target.is_empty() {
        return Some(Vec::new());
    }
    let mut order: Vec<usize> = (0..sets.len())
        .filter(|&i| !sets[i].intersection(target).is_empty())
        .collect();
    order.sort_by(|&i, &j| {
        sets[j]
            .intersection(target)
            .len()
            .cmp(&sets[i].intersection(target).len())
            .then(sets[i].cmp(&sets[j]))
    });
    let mut by_point: Vec<Vec<usize>> = vec![Vec::new(); target.max().map_or(0, |m| m + 1)];
    for &i in &order {
        for p in sets[i].intersection(target) {
            by_point[p].push(i);
        }
    }
    let widest = order
        .first()
        .map_or(1, |&i| sets[i].intersection(target).len())
        .max(1);
    let mut stack = Vec::new();
    for depth in 1..=budget.min(target.len()) {
        let ctx = Search {
            target,
            sets,
            by_point: &by_point,
            singletons,
            widest,
        };
        if ctx.dfs(IndexSet::EMPTY, depth, &mut stack) {
            return Some(stack);
        }
    }
    None
}

struct Search<'a> {
    target: IndexSet,
    sets: &'a [IndexSet],
    by_point: &'a [Vec<usize>],
    singletons: bool,
    widest: usize,
}

impl Search<'_> {
    fn dfs(&self, covered: IndexSet, left: usize, stack: &mut Vec<Choice>) -> bool {
        let missing = self.target.difference(covered);
        let Some(p) = missing.min() else {
            return true;
        };
        if left == 0 || missing.len() > left * self.widest {
            return false;
        }
        for &i in &self.by_point[p] {
            stack.push(Choice::Set(i));
            if self.dfs(covered.union(self.sets[i]), left - 1, stack) {
                return true;
            }
            stack.pop();
        }
        if self.singletons {
            stack.push(Choice::Singleton(p));
            if self.dfs(covered.with(p), left - 1, stack) {
                return true;
            }
            stack.pop();
        }
        false
    }
}
