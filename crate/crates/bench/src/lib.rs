//! Fixture builders shared by the benchmark targets.

use jumploci_core::{Character, Presentation, Rat, TorusSpec};

/// Genus-two surface group: one relator, four generators, the heaviest of
/// the shipped presentations.
pub fn genus2() -> Presentation {
    Presentation::parse("group genus2\ngens a b c d\nrel a b a^-1 b^-1 c d c^-1 d^-1")
        .expect("fixture parses")
}

/// Full four-parameter character torus of the genus-two group.
pub fn genus2_full() -> TorusSpec {
    TorusSpec::new(
        "genus2-full",
        Character::trivial(4),
        (0..4)
            .map(|i| (0..4).map(|j| i64::from(i == j)).collect())
            .collect(),
    )
    .expect("fixture is a valid spec")
}

/// One-parameter subtorus (t, 1, 1, 1) of the genus-two torus.
pub fn genus2_sub() -> TorusSpec {
    TorusSpec::new(
        "genus2-sub",
        Character::trivial(4),
        vec![vec![1], vec![0], vec![0], vec![0]],
    )
    .expect("fixture is a valid spec")
}

/// An order-60 character: the evaluated Alexander matrix lives in the
/// degree-16 cyclotomic field of level 60.
pub fn order_60_character() -> Character {
    Character::new(vec![
        Rat::new(1, 60),
        Rat::new(7, 60),
        Rat::new(11, 60),
        Rat::new(0, 1),
    ])
}
