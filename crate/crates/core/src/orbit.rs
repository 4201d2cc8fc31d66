//! Orbit partitions of a finite set under a family of permutations given as
//! image tables.

/// A partition of `0..n` into blocks, numbered by least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Orbits of `0..n` under the group generated by `gens`.
    ///
    /// Blocks are numbered in order of their least element and each block is
    /// sorted ascending.
    pub fn orbits(n: usize, gens: &[&[usize]]) -> Self {
        const UNSEEN: usize = usize::MAX;
        let mut block_of = vec![UNSEEN; n];
        let mut blocks = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if block_of[start] != UNSEEN {
                continue;
            }
            let id = blocks.len();
            let mut block = vec![start];
            block_of[start] = id;
            stack.push(start);
            while let Some(x) = stack.pop() {
                for g in gens {
                    let y = g[x];
                    if block_of[y] == UNSEEN {
                        block_of[y] = id;
                        block.push(y);
                        stack.push(y);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        Partition { block_of, blocks }
    }

    /// Builds a partition from a block assignment whose ids are already
    /// numbered by least element.
    pub(crate) fn from_assignment(block_of: Vec<usize>, count: usize) -> Self {
        let mut blocks = vec![Vec::new(); count];
        for (x, &b) in block_of.iter().enumerate() {
            blocks[b].push(x);
        }
        Partition { block_of, blocks }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn block(&self, id: usize) -> &[usize] {
        &self.blocks[id]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn assignment(&self) -> &[usize] {
        &self.block_of
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

pub(crate) fn is_involution(p: &[usize]) -> Option<usize> {
    (0..p.len()).find(|&x| p[x] >= p.len() || p[p[x]] != x)
}

pub(crate) fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x)
}

/// `outer ∘ inner`, i.e. `x ↦ outer[inner[x]]`.
pub(crate) fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&x| outer[x]).collect()
}

pub(crate) fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Propagates a color-respecting map from a connected structure `src` into
/// `dst`, sending vertex 0 to `base_image`. Generator `i` of `src` is matched
/// with generator `color_map[i]` of `dst`. Returns the image table if the
/// propagation is consistent and bijective.
pub(crate) fn propagate(
    src: &[&[usize]],
    dst: &[&[usize]],
    color_map: &[usize],
    base_image: usize,
) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let n = src.first().map_or(0, |g| g.len());
    if n == 0 || dst.first().map_or(0, |g| g.len()) != n {
        return None;
    }
    let mut image = vec![UNSET; n];
    let mut used = vec![false; n];
    image[0] = base_image;
    used[base_image] = true;
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        let fx = image[x];
        for (i, gen) in src.iter().enumerate() {
            let y = gen[x];
            let fy = dst[color_map[i]][fx];
            if image[y] == UNSET {
                if used[fy] {
                    return None;
                }
                image[y] = fy;
                used[fy] = true;
                stack.push(y);
            } else if image[y] != fy {
                return None;
            }
        }
    }
    if image.contains(&UNSET) {
        return None;
    }
    Some(image)
}
