//! Library surface of the command-line front end: the polynomial grammar
//! parser and the result renderers, kept separate from `main` so they can be
//! tested directly.

pub mod parse;
pub mod render;

pub use parse::{
    parse_gauss, parse_polynomial, render_polynomial, ParseError, ParsedInput, ParsedPoly,
    RingChoice,
};
pub use render::{exit_code, render_result, OutputFormat};
