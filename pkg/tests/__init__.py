"""rotkit 测试模块"""
