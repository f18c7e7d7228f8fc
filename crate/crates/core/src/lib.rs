//! Graded modules over `R = Q[t1, ..., tr]` with `deg ti = 2`: Gröbner
//! bases, minimal resolutions, Ext against `R`, depth and the
//! Cohen–Macaulay property, local cohomology, and checks of the
//! Atiyah–Bredon complex of torus actions on fixture data.

pub mod atiyah_bredon;
pub mod complexes;
pub mod gkm;
pub mod invariants;
pub mod io;
pub mod module;
pub mod ring;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/atiyah-bredon.md")]
    mod atiyah_bredon {}
    #[doc = include_str!("../../../book/src/gkm.md")]
    mod gkm {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
