"""Expression language and command surface."""
