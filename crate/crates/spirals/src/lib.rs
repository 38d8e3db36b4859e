//! Exact combinatorics of spirals, nilpotent orbits and blocks for
//! Z/m-graded special linear and symplectic quiver algebras.
//!
//! Everything is computed over the rationals (or small prime fields in the
//! brute-force oracle) with no floating point, so every equality in the
//! library and its test suites is exact. The main capabilities, each with a
//! runnable example under `examples/`:
//!
//! - graded spaces, homogeneous elements, bracket and trace pairing
//!   ([`graded`]);
//! - chain types, adapted bases and graded sl2 completion ([`nilpotent`]);
//! - ε-spirals from rational cocharacters, canonical spirals of nilpotents,
//!   spiral refinement and the chain quiver ([`spiral`]);
//! - the orbit census and component groups ([`census`]);
//! - SL blocks, the block map Ψ and its section ω ([`blocks`]);
//! - symplectic dimensions, duality-respecting cocharacters and the
//!   symplectic block set ([`symplectic`]);
//! - brute-force verification over F_q ([`oracle`]);
//! - seeded property suites shared by the CLI and the acceptance tests
//!   ([`verify`]).

pub mod blocks;
pub mod census;
pub mod cli;
pub mod cochar;
pub mod error;
pub mod graded;
pub mod mat;
pub mod nilpotent;
pub mod oracle;
pub mod rat;
pub mod spiral;
pub mod symplectic;
pub mod verify;

pub use error::Error;
pub use rat::Rat;
