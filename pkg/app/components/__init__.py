# -*- coding: utf-8 -*-
"""
工作台组件
machine / relations / constructions / verifier 四个组件，
通过 config/settings.yaml 的 enabled_components 启用，由 core 加载
"""
