pub mod exactalg;
pub mod partcomb;
pub mod multisym;
pub mod symfn;
pub mod toroidal;
pub mod quiverref;
pub mod wreath;
pub mod cli;
