"""样式模块"""
