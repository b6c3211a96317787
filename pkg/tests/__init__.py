"""FusedHecke test package."""
