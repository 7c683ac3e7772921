import java.util.List;

public class QueryRunner {
    public void execute() {
        Query query = null;
        List<Query> queries = null;
    }
}
