//! Rule-based Turkish grapheme-to-phoneme conversion.
//!
//! Maps a surface word to the SAMPA pronunciations of all its morphological
//! analyses: lexicon lookup with genre-specific handling (proper nouns,
//! geographical names, compounds, abbreviations, foreign words), a
//! suffix-template analyzer with vowel harmony and boundary voicing, soft-g
//! resolution, fast-speech variants, and syllable/stress annotation for TTS.

pub mod error;
pub mod foreign;
pub mod lexicon;
pub mod morphology;
pub mod native;
pub mod pipeline;
pub mod postphon;
pub mod phonology;
pub mod prosody;
pub mod stemmer;

pub use error::{G2pError, Result};
pub use lexicon::Lexicon;
pub use phonology::{Phoneme, Pron};
