# encoding='utf-8'
