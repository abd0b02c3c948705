import java.sql.*;

public class TableTypo {
    public void run(Connection connection) throws SQLException {
        connection.prepareStatement("Select * from employe");
    }
}
