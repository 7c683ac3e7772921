import java.util.Set;

public class MetricType {
    private String code;

    public String getCode() {
        return code;
    }
}

public class GMetricType {
    private String gangliaName;
}

public class GangliaReporter {
    private Set<MetricType> disabledMetricTypes;

    public Set<MetricType> getDisabledMetricTypes() {
        return disabledMetricTypes;
    }

    public void disable(MetricType metricType) {
        disabledMetricTypes.add(metricType);
    }
}
