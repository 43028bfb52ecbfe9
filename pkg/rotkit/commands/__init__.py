"""rotkit 命令模块"""
