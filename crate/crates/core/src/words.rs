//! Freely reduced words over a symmetric generator alphabet: breadth-first
//! enumeration plus the reduction and canonicalization helpers shared by
//! the group-theoretic modules.

/// A letter: generator index and exponent `±1`.
pub(crate) type Letter = (usize, i8);

fn inverse_of(l: Letter) -> Letter {
    (l.0, -l.1)
}

/// Sort key placing `g₀ < g₀⁻¹ < g₁ < g₁⁻¹ < …`.
fn key(l: Letter) -> (usize, u8) {
    (l.0, if l.1 > 0 { 0 } else { 1 })
}

fn word_key(w: &[Letter]) -> Vec<(usize, u8)> {
    w.iter().map(|&l| key(l)).collect()
}

/// All freely reduced words of length `1..=depth` over `gen_count`
/// generators, breadth-first, lexicographic within each length.
pub(crate) fn reduced_words(gen_count: usize, depth: usize) -> Vec<Vec<Letter>> {
    let alphabet: Vec<Letter> = (0..gen_count)
        .flat_map(|i| [(i, 1i8), (i, -1i8)])
        .collect();
    let mut all: Vec<Vec<Letter>> = Vec::new();
    let mut frontier: Vec<Vec<Letter>> = alphabet.iter().map(|&l| vec![l]).collect();
    for _ in 0..depth {
        if frontier.is_empty() {
            break;
        }
        all.extend(frontier.iter().cloned());
        let mut next = Vec::with_capacity(frontier.len() * alphabet.len());
        for w in &frontier {
            let last = *w.last().expect("frontier words are nonempty");
            for &l in &alphabet {
                if l != inverse_of(last) {
                    let mut ext = w.clone();
                    ext.push(l);
                    next.push(ext);
                }
            }
        }
        frontier = next;
    }
    all
}

/// Cancels adjacent inverse pairs until none remain.
pub(crate) fn free_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last().copied() == Some(inverse_of(l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Freely reduces, then strips inverse first/last pairs (conjugation
/// collars) until the word is cyclically reduced.
pub(crate) fn cyclic_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut w = free_reduce(letters);
    while w.len() >= 2 && w[0] == inverse_of(*w.last().expect("nonempty")) {
        w = w[1..w.len() - 1].to_vec();
    }
    w
}

/// Lexicographically least cyclic rotation of a (cyclically reduced)
/// word — the canonical representative of its conjugacy class rotations.
pub(crate) fn canonical_rotation(letters: &[Letter]) -> Vec<Letter> {
    if letters.is_empty() {
        return Vec::new();
    }
    let mut best = letters.to_vec();
    let mut best_key = word_key(&best);
    for shift in 1..letters.len() {
        let mut rot = letters[shift..].to_vec();
        rot.extend_from_slice(&letters[..shift]);
        let k = word_key(&rot);
        if k < best_key {
            best_key = k;
            best = rot;
        }
    }
    best
}

pub(crate) fn inverse_word(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(|&l| inverse_of(l)).collect()
}
