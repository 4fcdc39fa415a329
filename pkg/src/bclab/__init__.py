"""Bicomplex weighted Hardy spaces, D-normed bicomplex C*-algebras and composition operators."""
