"""
工作流包初始化文件
用于存放所有全局工作流定义
"""