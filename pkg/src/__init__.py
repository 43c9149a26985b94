# ClassCone - Java 类信息锥形图可视化工具
