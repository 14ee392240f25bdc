"""Test suite for ShiftLab"""
