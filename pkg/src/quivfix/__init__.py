"""Fixed loci of quiver automorphisms on quiver moduli over exact fields."""
