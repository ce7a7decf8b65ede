use super::{Presentation, Word};

/// Greedy Tietze simplification.
///
/// Repeats until nothing changes: cyclically reduce relators, delete empty ones, delete
/// relators equal to an earlier one up to cyclic permutation and inversion, then pick the
/// shortest relator (lowest index on ties) in which some generator occurs exactly once,
/// solve it for that generator (lowest such index) and substitute it away.
///
/// Every step is a Tietze move, so the group and in particular its abelianization are
/// unchanged. This is not an isomorphism test.
pub fn tietze_simplify(p: &Presentation) -> Presentation {
    let mut generator_count = p.generator_count();
    let mut relators: Vec<Word> = p.relators().to_vec();

    loop {
        relators = normalize_relators(relators);

        let Some((ri, g)) = elimination_candidate(&relators, generator_count) else {
            break;
        };
        let image = solve_for(&relators[ri], g);
        relators.remove(ri);
        relators = relators
            .iter()
            .map(|r| {
                r.substitute(g, &image)
                    .map_generators(|x| if x > g { x - 1 } else { x })
            })
            .collect();
        generator_count -= 1;
    }

    Presentation::new(generator_count, relators).expect("generators renumbered consistently")
}

fn normalize_relators(relators: Vec<Word>) -> Vec<Word> {
    let mut kept: Vec<Word> = Vec::with_capacity(relators.len());
    for r in relators {
        let r = r.cyclic_reduce();
        if r.is_empty() || kept.iter().any(|k| k.is_cyclic_variant_of(&r)) {
            continue;
        }
        kept.push(r);
    }
    kept
}

fn elimination_candidate(relators: &[Word], generator_count: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, r) in relators.iter().enumerate() {
        if best.is_some_and(|(bi, _)| relators[bi].len() <= r.len()) {
            continue;
        }
        if let Some(g) = (1..=generator_count).find(|&g| r.occurrences(g) == 1) {
            best = Some((i, g));
        }
    }
    best
}

/// For a relator containing `g^±1` exactly once, returns the word `w` with `g = w` in the
/// group.
fn solve_for(relator: &Word, g: usize) -> Word {
    let k = relator
        .letters()
        .iter()
        .position(|l| l.generator() == g)
        .expect("generator occurs in relator");
    // rotate so the relator reads g^e · rest = 1, giving g^e = rest^-1
    let rotated = relator.rotate(k);
    let rest = Word::from_letters(rotated.letters()[1..].iter().copied());
    if rotated.letters()[0].is_inverse() {
        rest
    } else {
        rest.inverse()
    }
}
