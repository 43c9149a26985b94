# 度量报告
