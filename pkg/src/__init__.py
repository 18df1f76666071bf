"""Realizers, boolean realizers and local realizers of finite posets."""
