//! Bundled ideal files.

macro_rules! fixtures {
    ($($name:literal),* $(,)?) => {
        /// `(name, file contents)` for every bundled fixture.
        pub const FIXTURES: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../fixtures/", $name, ".ideal")))),*
        ];
    };
}

fixtures!(
    "t41_V1", "t41_V2", "t41_V3", "t41_V4", "t41_V5", "t41_V8", "t41_V9", "s52_V1", "s52_V1q",
    "s52_V2", "s52_V3", "quadric", "conic", "cusp", "node",
);

/// Complete-intersection runtime examples.
pub const RUNTIME_SET: &[&str] = &[
    "t41_V1", "t41_V2", "t41_V3", "t41_V4", "t41_V5", "t41_V8", "t41_V9",
];

/// Segre stress examples.
pub const STRESS_SET: &[&str] = &["s52_V1", "s52_V1q", "s52_V2", "s52_V3"];

pub fn fixture(name: &str) -> Option<&'static str> {
    FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}

pub fn names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}
