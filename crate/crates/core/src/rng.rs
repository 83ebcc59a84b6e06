//! Seeded randomness.
//!
//! Every randomized operation takes an explicit generator derived from a
//! single 64-bit seed. The generator is PCG-XSL-RR 128/64 (`Pcg64`),
//! seeded through `SeedableRng::seed_from_u64`.

use rand::SeedableRng;

pub type SeededRng = rand_pcg::Pcg64;

pub fn seeded(seed: u64) -> SeededRng {
    SeededRng::seed_from_u64(seed)
}
