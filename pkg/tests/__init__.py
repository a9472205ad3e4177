"""Tests for palper"""
