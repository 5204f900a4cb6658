use std::collections::HashSet;

use crate::automata::dfa::Dfa;
use crate::error::{Error, Result};

impl Dfa {
    /// The accessible part of the DFA, renumbered by breadth-first search
    /// from the initial state with symbols taken in alphabet order. Two
    /// minimal DFAs accept the same language iff their canonical forms are
    /// structurally equal.
    pub fn canonicalize(&self) -> Dfa {
        let k = self.alphabet().len();
        let mut order = vec![usize::MAX; self.state_count()];
        let mut bfs = vec![self.initial()];
        order[self.initial()] = 0;
        let mut at = 0;
        while at < bfs.len() {
            let q = bfs[at];
            for a in 0..k {
                let t = self.next(q, a);
                if order[t] == usize::MAX {
                    order[t] = bfs.len();
                    bfs.push(t);
                }
            }
            at += 1;
        }
        let rows = bfs
            .iter()
            .map(|&q| (0..k).map(|a| order[self.next(q, a)]).collect())
            .collect();
        let finals = bfs
            .iter()
            .enumerate()
            .filter(|(_, &q)| self.is_final(q))
            .map(|(i, _)| i);
        Dfa::new(self.alphabet().clone(), 0, finals, rows)
            .expect("canonicalization preserves validity")
    }

    /// The minimal complete DFA for this DFA's language, computed by
    /// Hopcroft partition refinement on the accessible part. The result is
    /// canonically numbered, so equal languages yield structurally equal
    /// DFAs. The state count of the result is the state complexity of the
    /// language (the sink, when present, is counted).
    pub fn minimize(&self) -> Dfa {
        let reachable = self.canonicalize();
        let n = reachable.state_count();
        let k = reachable.alphabet().len();

        // preimages: inv[a][q] = states mapping to q on a
        let mut inv = vec![vec![Vec::new(); n]; k];
        for q in 0..n {
            for (a, inv_a) in inv.iter_mut().enumerate() {
                inv_a[reachable.next(q, a)].push(q);
            }
        }

        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = vec![0usize; n];
        let finals: Vec<usize> = reachable.final_states();
        let non_finals: Vec<usize> = (0..n).filter(|&q| !reachable.is_final(q)).collect();
        for part in [finals, non_finals] {
            if !part.is_empty() {
                for &q in &part {
                    block_of[q] = blocks.len();
                }
                blocks.push(part);
            }
        }

        let mut worklist: Vec<(usize, usize)> = Vec::new();
        let mut queued: HashSet<(usize, usize)> = HashSet::new();
        let smaller = (0..blocks.len()).min_by_key(|&b| blocks[b].len()).unwrap();
        for a in 0..k {
            worklist.push((smaller, a));
            queued.insert((smaller, a));
        }

        while let Some((splitter, a)) = worklist.pop() {
            queued.remove(&(splitter, a));
            // states whose a-successor lies in the splitter block
            let preimage: Vec<usize> = blocks[splitter]
                .iter()
                .flat_map(|&q| inv[a][q].iter().copied())
                .collect();
            // group the preimage by current block
            let mut hits: Vec<Vec<usize>> = Vec::new();
            let mut hit_blocks: Vec<usize> = Vec::new();
            let mut hit_index = vec![usize::MAX; blocks.len()];
            for &p in &preimage {
                let b = block_of[p];
                if hit_index[b] == usize::MAX {
                    hit_index[b] = hits.len();
                    hit_blocks.push(b);
                    hits.push(Vec::new());
                }
                hits[hit_index[b]].push(p);
            }
            for (idx, b) in hit_blocks.into_iter().enumerate() {
                let mut moved = std::mem::take(&mut hits[idx]);
                moved.sort_unstable();
                moved.dedup();
                if moved.len() == blocks[b].len() {
                    continue; // whole block hit; no split
                }
                // split block b into (kept = b \ moved) and (moved)
                let new_id = blocks.len();
                let moved_set: HashSet<usize> = moved.iter().copied().collect();
                blocks[b].retain(|q| !moved_set.contains(q));
                for &q in &moved {
                    block_of[q] = new_id;
                }
                blocks.push(moved);
                for c in 0..k {
                    if queued.contains(&(b, c)) {
                        worklist.push((new_id, c));
                        queued.insert((new_id, c));
                    } else {
                        let target = if blocks[b].len() <= blocks[new_id].len() {
                            b
                        } else {
                            new_id
                        };
                        worklist.push((target, c));
                        queued.insert((target, c));
                    }
                }
            }
        }

        let rows = blocks
            .iter()
            .map(|block| {
                let q = block[0];
                (0..k).map(|a| block_of[reachable.next(q, a)]).collect()
            })
            .collect();
        let finals = (0..blocks.len()).filter(|&b| reachable.is_final(blocks[b][0]));
        let quotient = Dfa::new(
            reachable.alphabet().clone(),
            block_of[reachable.initial()],
            finals,
            rows,
        )
        .expect("quotient of a valid DFA is valid");
        quotient.canonicalize()
    }

    /// Structural isomorphism of two minimal DFAs: true iff their
    /// BFS-canonical forms are identical. Inputs must already be minimal
    /// (state count unchanged by [`Dfa::minimize`]); anything else is
    /// rejected, since isomorphism of non-minimal DFAs is not a meaningful
    /// language comparison.
    pub fn isomorphic(&self, other: &Dfa) -> Result<bool> {
        self.check_same_alphabet(other)?;
        for (side, d) in [("left", self), ("right", other)] {
            if d.minimize().state_count() != d.state_count() {
                return Err(Error::invalid(format!(
                    "{side} operand of isomorphic is not minimal"
                )));
            }
        }
        Ok(self.canonicalize() == other.canonicalize())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::alphabet::Alphabet;

    fn ab() -> Alphabet {
        Alphabet::from_chars("ab").unwrap()
    }

    #[test]
    fn merges_duplicated_final_states() {
        // states 2 and 3 are copies of one another
        let d = Dfa::new(
            ab(),
            0,
            [2, 3],
            vec![vec![1, 0], vec![2, 3], vec![2, 2], vec![3, 3]],
        )
        .unwrap();
        let min = d.minimize();
        assert_eq!(min.state_count(), d.state_count() - 1);
        assert!(min.equivalent(&d).unwrap());
    }

    #[test]
    fn single_state_languages() {
        let empty = Dfa::new(ab(), 0, [], vec![vec![0, 0]]).unwrap();
        let total = Dfa::new(ab(), 0, [0], vec![vec![0, 0]]).unwrap();
        assert_eq!(empty.minimize().state_count(), 1);
        assert_eq!(total.minimize().state_count(), 1);
        assert!(!empty.equivalent(&total).unwrap());
    }

    #[test]
    fn minimize_drops_unreachable_states() {
        // state 2 is unreachable
        let d = Dfa::new(ab(), 0, [1], vec![vec![1, 0], vec![1, 1], vec![2, 0]]).unwrap();
        assert_eq!(d.minimize().state_count(), 2);
    }

    #[test]
    fn isomorphic_rejects_non_minimal_inputs() {
        let d = Dfa::new(ab(), 0, [1, 2], vec![vec![1, 2], vec![1, 1], vec![2, 2]]).unwrap();
        assert!(d.minimize().state_count() < d.state_count());
        assert!(d.isomorphic(&d).is_err());
    }

    #[test]
    fn isomorphic_is_renaming_invariant() {
        let d = Dfa::new(ab(), 0, [2], vec![vec![1, 0], vec![2, 1], vec![0, 2]]).unwrap();
        let d = d.minimize();
        // renumber the states by the permutation 0->2, 1->0, 2->1
        let perm = [2usize, 0, 1];
        let mut rows = vec![vec![0usize; 2]; 3];
        let mut finals = Vec::new();
        for q in 0..3 {
            for a in 0..2 {
                rows[perm[q]][a] = perm[d.next(q, a)];
            }
            if d.is_final(q) {
                finals.push(perm[q]);
            }
        }
        let renamed = Dfa::new(ab(), perm[d.initial()], finals, rows).unwrap();
        assert!(d.isomorphic(&renamed).unwrap());
    }
}
