//! Linear codes over `GF(2)`, `GF(4)` and `GF(8)`, and Gilbert-Varshamov
//! existence arithmetic.

mod code;
mod gf;
mod gv;
mod table;

pub use code::{
    concatenate, concatenate_spec, extend_parity, extended_hamming_8_4_4, parity_3_2_2,
    parse_generator, reed_muller_1, repetition, shorten, simplex_7_3_4, write_generator,
    zero_pad, CodeSpec, CodeStatus, LinearCode, ENUMERATION_CAP,
};
pub use gf::Gf;
pub use gv::{gv_exists, gv_max_k, lemma62_params, GvProfile};
pub use table::CodeTable;
pub(crate) use table::{line_of, parse_err};
