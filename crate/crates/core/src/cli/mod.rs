//! Command-line front end (assembled below).
