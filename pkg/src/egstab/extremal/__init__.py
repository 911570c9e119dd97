"""Bounds, constructions and recognizers for graphs without long cycles."""
